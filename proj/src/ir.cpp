#include "softflip/ir.hpp"

#include <algorithm>

#include "softflip/errors.hpp"

namespace softflip {

namespace {

constexpr SlotKind R = SlotKind::Reg;
constexpr SlotKind V = SlotKind::RegImm;
constexpr SlotKind I = SlotKind::Imm;
constexpr SlotKind L = SlotKind::Label;
constexpr SlotKind F = SlotKind::Func;

constexpr InstrClass AR = InstrClass::Arithmetic;
constexpr InstrClass LS = InstrClass::LoadStore;
constexpr InstrClass CT = InstrClass::Control;
constexpr InstrClass TP = InstrClass::ThreadPrimitive;
constexpr InstrClass IO = InstrClass::Io;

// Indexed by Opcode. print takes an optional mode immediate (0 decimal,
// nonzero fixed-width hex).
const std::array<OpInfo, kOpcodeCount> kOps = {{
    {"add", AR, 3, 3, {R, R, V}, true, false},
    {"sub", AR, 3, 3, {R, R, V}, true, false},
    {"mul", AR, 3, 3, {R, R, V}, true, false},
    {"div", AR, 3, 3, {R, R, V}, true, false},
    {"mod", AR, 3, 3, {R, R, V}, true, false},
    {"and", AR, 3, 3, {R, R, V}, true, false},
    {"or", AR, 3, 3, {R, R, V}, true, false},
    {"xor", AR, 3, 3, {R, R, V}, true, false},
    {"shl", AR, 3, 3, {R, R, V}, true, false},
    {"shr", AR, 3, 3, {R, R, V}, true, false},
    {"cmp", AR, 3, 3, {R, R, V}, true, false},
    {"mov", AR, 2, 2, {R, R, R}, true, false},
    {"movi", AR, 2, 2, {R, I, I}, true, false},
    {"load", LS, 3, 3, {R, R, V}, true, false},
    {"store", LS, 3, 3, {R, R, V}, false, true},
    {"br", CT, 1, 1, {L, L, L}, false, false},
    {"brz", CT, 2, 2, {R, L, L}, false, false},
    {"brnz", CT, 2, 2, {R, L, L}, false, false},
    {"call", CT, 1, 1, {F, F, F}, false, false},
    {"ret", CT, 0, 0, {R, R, R}, false, false},
    {"spawn", TP, 3, 3, {R, F, V}, true, false},
    {"join", TP, 2, 2, {R, V, V}, true, false},
    {"lock", TP, 1, 1, {V, V, V}, false, false},
    {"unlock", TP, 1, 1, {V, V, V}, false, false},
    {"print", IO, 1, 2, {R, I, I}, false, false},
    {"halt", CT, 0, 0, {R, R, R}, false, false},
    {"fadd", AR, 3, 3, {R, R, V}, true, false},
    {"fsub", AR, 3, 3, {R, R, V}, true, false},
    {"fmul", AR, 3, 3, {R, R, V}, true, false},
    {"fdiv", AR, 3, 3, {R, R, V}, true, false},
}};

}  // namespace

const OpInfo& op_info(Opcode op) { return kOps[static_cast<std::size_t>(op)]; }

InstrClass classify_opcode(Opcode op) { return op_info(op).cls; }

std::string_view opcode_name(Opcode op) { return op_info(op).name; }

std::string_view instr_class_name(InstrClass c) {
    switch (c) {
        case InstrClass::Arithmetic: return "arithmetic";
        case InstrClass::LoadStore: return "load_store";
        case InstrClass::Control: return "control";
        case InstrClass::ThreadPrimitive: return "thread_primitive";
        case InstrClass::Io: return "io";
    }
    return "?";
}

bool has_destination(Opcode op) {
    const OpInfo& info = op_info(op);
    return info.reg_dest || info.mem_dest;
}

bool writes_memory(Opcode op) { return op_info(op).mem_dest; }

bool opcode_from_name(std::string_view name, Opcode& out) {
    for (std::size_t i = 0; i < kOps.size(); ++i) {
        if (kOps[i].name == name) {
            out = static_cast<Opcode>(i);
            return true;
        }
    }
    return false;
}

Operand Operand::make_reg(unsigned r) {
    Operand o;
    o.kind = OperandKind::Reg;
    o.reg = static_cast<std::uint8_t>(r);
    return o;
}

Operand Operand::make_imm(Word w) {
    Operand o;
    o.kind = OperandKind::Imm;
    o.imm = w;
    return o;
}

Operand Operand::make_target(std::string n) {
    Operand o;
    o.kind = OperandKind::Target;
    o.name = std::move(n);
    return o;
}

namespace {

[[noreturn]] void fail(std::uint32_t line, const std::string& msg) {
    throw ParseError(static_cast<int>(line), msg);
}

void check_instruction(const Program& p, const Function& fn, Instruction& ins) {
    const OpInfo& info = op_info(ins.op);
    if (ins.ops.size() < info.min_ops || ins.ops.size() > info.max_ops)
        fail(ins.line, std::string(info.name) + ": expected " + std::to_string(info.min_ops) +
                           (info.min_ops == info.max_ops
                                ? ""
                                : ".." + std::to_string(info.max_ops)) +
                           " operand(s), got " + std::to_string(ins.ops.size()));

    for (std::size_t i = 0; i < ins.ops.size(); ++i) {
        Operand& o = ins.ops[i];
        switch (info.slots[i]) {
            case SlotKind::Reg:
                if (o.kind != OperandKind::Reg)
                    fail(ins.line, std::string(info.name) + ": operand " + std::to_string(i + 1) +
                                       " must be a register");
                break;
            case SlotKind::RegImm:
                if (o.kind == OperandKind::Target)
                    fail(ins.line, std::string(info.name) + ": operand " + std::to_string(i + 1) +
                                       " must be a register or immediate");
                break;
            case SlotKind::Imm:
                // movi also accepts a global name, folded to its base address.
                if (o.kind == OperandKind::Target) {
                    auto it = p.global_base.find(o.name);
                    if (it == p.global_base.end())
                        fail(ins.line, "unknown global '" + o.name + "'");
                    o = Operand::make_imm(it->second);
                } else if (o.kind != OperandKind::Imm) {
                    fail(ins.line, std::string(info.name) + ": operand " + std::to_string(i + 1) +
                                       " must be an immediate");
                }
                break;
            case SlotKind::Label: {
                if (o.kind != OperandKind::Target)
                    fail(ins.line, std::string(info.name) + ": operand " + std::to_string(i + 1) +
                                       " must be a label");
                auto it = fn.labels.find(o.name);
                if (it == fn.labels.end()) fail(ins.line, "undefined label '" + o.name + "'");
                o.target = it->second;
                break;
            }
            case SlotKind::Func: {
                if (o.kind != OperandKind::Target)
                    fail(ins.line, std::string(info.name) + ": operand " + std::to_string(i + 1) +
                                       " must be a function name");
                auto it = p.fn_index.find(o.name);
                if (it == p.fn_index.end()) fail(ins.line, "unknown function '" + o.name + "'");
                o.target = it->second;
                break;
            }
        }
    }
}

}  // namespace

void Program::finalize() {
    fn_index.clear();
    sites.clear();
    global_base.clear();
    global_words_total = 0;

    for (std::uint32_t i = 0; i < functions.size(); ++i) {
        const Function& fn = functions[i];
        if (fn.name.empty()) fail(0, "function with empty name");
        if (!fn_index.emplace(fn.name, i).second)
            fail(fn.body.empty() ? 0 : fn.body.front().line,
                 "duplicate function '" + fn.name + "'");
    }
    if (!fn_index.contains(entry)) fail(0, "entry function '" + entry + "' not defined");

    for (const GlobalDecl& g : globals) {
        if (g.words == 0) fail(0, "global '" + g.name + "' has zero size");
        if (g.init.size() > g.words) fail(0, "global '" + g.name + "' init longer than size");
        if (!global_base.emplace(g.name, global_words_total).second)
            fail(0, "duplicate global '" + g.name + "'");
        global_words_total += g.words;
    }

    std::uint32_t next_site = 0;
    for (std::uint32_t fi = 0; fi < functions.size(); ++fi) {
        Function& fn = functions[fi];
        if (fn.body.empty()) fail(0, "function '" + fn.name + "' has empty body");
        for (const auto& [label, index] : fn.labels) {
            if (index >= fn.body.size())
                fail(fn.body.back().line, "label '" + label + "' does not precede an instruction");
        }
        const Opcode last = fn.body.back().op;
        if (last != Opcode::Ret && last != Opcode::Halt && last != Opcode::Br)
            fail(fn.body.back().line,
                 "function '" + fn.name + "' must end with ret, halt, or br");
        for (std::uint32_t ii = 0; ii < fn.body.size(); ++ii) {
            Instruction& ins = fn.body[ii];
            ins.site_id = next_site++;
            check_instruction(*this, fn, ins);
            sites.push_back({fi, ii});
        }
    }
}

const Instruction& Program::site(std::uint32_t id) const {
    const SiteRef& ref = sites.at(id);
    return functions[ref.function].body[ref.index];
}

const Function& Program::function_of_site(std::uint32_t id) const {
    return functions[sites.at(id).function];
}

}  // namespace softflip
