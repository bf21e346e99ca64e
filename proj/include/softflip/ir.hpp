#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace softflip {

// Machine word: a raw 64-bit pattern. Integer ops treat it as two's
// complement, f* ops reinterpret it as an IEEE-754 binary64. Bit indices
// run 0 (LSB) .. 63 (MSB).
using Word = std::uint64_t;

inline constexpr unsigned kRegCount = 64;
inline constexpr unsigned kWordBits = 64;

enum class Opcode : std::uint8_t {
    Add, Sub, Mul, Div, Mod, And, Or, Xor, Shl, Shr, Cmp,
    Mov, Movi, Load, Store,
    Br, Brz, Brnz, Call, Ret,
    Spawn, Join, Lock, Unlock,
    Print, Halt,
    Fadd, Fsub, Fmul, Fdiv,
};
inline constexpr unsigned kOpcodeCount = 30;

enum class InstrClass : std::uint8_t { Arithmetic, LoadStore, Control, ThreadPrimitive, Io };
inline constexpr unsigned kInstrClassCount = 5;

InstrClass classify_opcode(Opcode op);
std::string_view opcode_name(Opcode op);
std::string_view instr_class_name(InstrClass c);

// True when the opcode writes a register or a memory word; such sites are
// the injectable fault anchors.
bool has_destination(Opcode op);
bool writes_memory(Opcode op);  // store only

// Operand slot kinds an opcode accepts, positionally.
enum class SlotKind : std::uint8_t {
    Reg,     // register only
    RegImm,  // register or immediate
    Imm,     // immediate only (movi also takes a global name, folded at resolve time)
    Label,   // branch target inside the function
    Func,    // function name (call/spawn)
};

struct OpInfo {
    std::string_view name;
    InstrClass cls;
    std::uint8_t min_ops;
    std::uint8_t max_ops;
    std::array<SlotKind, 3> slots;
    bool reg_dest;  // operand 0 is a destination register
    bool mem_dest;  // destination is the addressed memory word
};
const OpInfo& op_info(Opcode op);
bool opcode_from_name(std::string_view name, Opcode& out);

enum class OperandKind : std::uint8_t { Reg, Imm, Target };

struct Operand {
    OperandKind kind = OperandKind::Imm;
    std::uint8_t reg = 0;
    Word imm = 0;
    std::string name;           // Target: label or function name as written
    std::uint32_t target = 0;   // resolved instruction index / function index

    static Operand make_reg(unsigned r);
    static Operand make_imm(Word w);
    static Operand make_target(std::string n);
    bool operator==(const Operand&) const = default;
};

struct Instruction {
    std::uint32_t site_id = 0;  // global static id, textual order from 0
    Opcode op = Opcode::Halt;
    std::vector<Operand> ops;
    std::uint32_t line = 0;     // source line, diagnostics only

    bool operator==(const Instruction& o) const {
        return site_id == o.site_id && op == o.op && ops == o.ops;
    }
};

struct Function {
    std::string name;
    std::uint32_t params = 0;
    std::vector<Instruction> body;
    std::map<std::string, std::uint32_t> labels;  // label -> instruction index

    bool operator==(const Function& o) const {
        return name == o.name && params == o.params && body == o.body && labels == o.labels;
    }
};

struct GlobalDecl {
    std::string name;
    std::uint64_t words = 0;
    std::vector<Word> init;  // missing tail words are zero

    bool operator==(const GlobalDecl&) const = default;
};

struct SiteRef {
    std::uint32_t function = 0;
    std::uint32_t index = 0;
};

struct Program {
    std::vector<Function> functions;
    std::string entry = "main";
    std::vector<GlobalDecl> globals;

    // Derived by finalize(); not part of structural equality.
    std::unordered_map<std::string, std::uint32_t> fn_index;
    std::vector<SiteRef> sites;
    std::unordered_map<std::string, std::uint64_t> global_base;
    std::uint64_t global_words_total = 0;

    // Assigns site ids, resolves targets and global names, validates the
    // whole unit. Throws ParseError (with the defining line where known).
    void finalize();

    std::uint32_t site_count() const { return static_cast<std::uint32_t>(sites.size()); }
    const Instruction& site(std::uint32_t id) const;
    const Function& function_of_site(std::uint32_t id) const;
    std::uint32_t entry_index() const { return fn_index.at(entry); }

    bool operator==(const Program& o) const {
        return functions == o.functions && entry == o.entry && globals == o.globals;
    }
};

}  // namespace softflip
