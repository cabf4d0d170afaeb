#include "sgame/circuit.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace sgame {

NandCircuit NandCircuit::make(int radius, std::vector<std::vector<CircuitArg>> gates) {
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    if (gates.empty()) throw std::invalid_argument("circuit needs at least one assignment");
    for (size_t j = 0; j < gates.size(); ++j) {
        if (gates[j].empty())
            throw std::invalid_argument("assignment " + std::to_string(j + 1) + " has no arguments");
        for (const CircuitArg& a : gates[j]) {
            if (a.kind == CircuitArg::Input) {
                if (a.index < -radius || a.index > radius)
                    throw std::invalid_argument("input index out of window");
            } else {
                if (a.index < 1 || a.index > static_cast<int>(j))
                    throw std::invalid_argument("assignment may only reference earlier assignments");
            }
        }
    }
    return NandCircuit{radius, std::move(gates)};
}

bool NandCircuit::last_gate_input_free() const {
    for (const CircuitArg& a : gates.back())
        if (a.kind == CircuitArg::Input) return false;
    return true;
}

CircuitEval evaluate(const NandCircuit& c, const std::vector<int>& window) {
    if (static_cast<int>(window.size()) != 2 * c.radius + 1)
        throw std::invalid_argument("window width must be 2r+1");
    CircuitEval ev;
    ev.assignments.reserve(c.gates.size());
    for (const auto& gate : c.gates) {
        int conj = 1;
        for (const CircuitArg& a : gate) {
            int v = a.kind == CircuitArg::Input ? window[a.index + c.radius]
                                                : ev.assignments[a.index - 1];
            conj &= v;
            if (!conj) break;
        }
        ev.assignments.push_back(1 - conj);
    }
    ev.output = ev.assignments.back();
    return ev;
}

TruthTable TruthTable::make(int radius, std::vector<uint8_t> bits) {
    if (radius < 0 || 2 * radius + 1 > 16)
        throw std::invalid_argument("table synthesis is limited to 16 inputs");
    if (bits.size() != (size_t{1} << (2 * radius + 1)))
        throw std::invalid_argument("table must have 2^(2r+1) entries");
    for (uint8_t b : bits)
        if (b > 1) throw std::invalid_argument("table entries must be bits");
    return TruthTable{radius, std::move(bits)};
}

size_t TruthTable::window_index(const std::vector<int>& window) {
    size_t idx = 0;
    for (int b : window) idx = (idx << 1) | static_cast<size_t>(b & 1);
    return idx;
}

int TruthTable::operator()(const std::vector<int>& window) const {
    if (static_cast<int>(window.size()) != width())
        throw std::invalid_argument("window width must be 2r+1");
    return bits[window_index(window)];
}

NandCircuit synthesize_from_table(const TruthTable& t) {
    const int r = t.radius;
    const int w = t.width();
    std::vector<std::vector<CircuitArg>> gates;
    auto input = [&](int i) { return CircuitArg{CircuitArg::Input, i}; };
    auto assign = [&](int j) { return CircuitArg{CircuitArg::Assign, j}; };

    bool all_ones = std::all_of(t.bits.begin(), t.bits.end(), [](uint8_t b) { return b == 1; });
    bool all_zeros = std::all_of(t.bits.begin(), t.bits.end(), [](uint8_t b) { return b == 0; });
    if (all_ones || all_zeros) {
        // x nand (not x) = 1; one more negation for the constant 0
        gates.push_back({input(-r)});
        gates.push_back({input(-r), assign(1)});
        if (all_zeros) gates.push_back({assign(2)});
        return NandCircuit::make(r, std::move(gates));
    }

    // sum of products: one negation gate per input (shared), one gate per
    // minterm computing not(product), and a final gate NANDing those,
    // which is exactly the OR of the minterms
    std::vector<int> neg_gate(w, 0);  // 1-based id of [u_i], built lazily
    std::vector<CircuitArg> final_args;
    for (size_t idx = 0; idx < t.bits.size(); ++idx) {
        if (!t.bits[idx]) continue;
        std::vector<CircuitArg> term;
        for (int pos = 0; pos < w; ++pos) {
            int bit = (idx >> (w - 1 - pos)) & 1;
            int i = pos - r;
            if (bit) {
                term.push_back(input(i));
            } else {
                if (!neg_gate[pos]) {
                    gates.push_back({input(i)});
                    neg_gate[pos] = static_cast<int>(gates.size());
                }
                term.push_back(assign(neg_gate[pos]));
            }
        }
        gates.push_back(std::move(term));
        final_args.push_back(assign(static_cast<int>(gates.size())));
    }
    gates.push_back(std::move(final_args));
    return NandCircuit::make(r, std::move(gates));
}

NandCircuit normalize_last(const NandCircuit& c) {
    const int r = c.radius;
    const int w = 2 * r + 1;
    std::vector<std::vector<CircuitArg>> gates;
    gates.reserve(c.gates.size() + 2 * w);
    // s_{i+r+1} = [u_i] and s_{i+3r+2} = [s_{i+r+1}] for -r <= i <= r;
    // the second row double-negates, so s_{i+3r+2} equals u_i
    for (int i = -r; i <= r; ++i) gates.push_back({CircuitArg{CircuitArg::Input, i}});
    for (int i = -r; i <= r; ++i) gates.push_back({CircuitArg{CircuitArg::Assign, i + r + 1}});
    for (const auto& gate : c.gates) {
        std::vector<CircuitArg> mapped;
        mapped.reserve(gate.size());
        for (const CircuitArg& a : gate) {
            if (a.kind == CircuitArg::Input)
                mapped.push_back(CircuitArg{CircuitArg::Assign, a.index + 3 * r + 2});
            else
                mapped.push_back(CircuitArg{CircuitArg::Assign, a.index + 2 * w});
        }
        gates.push_back(std::move(mapped));
    }
    return NandCircuit::make(r, std::move(gates));
}

TruthTable table_of(const NandCircuit& c) {
    const int w = 2 * c.radius + 1;
    if (w > 16) throw std::invalid_argument("table extraction is limited to 16 inputs");
    std::vector<uint8_t> bits(size_t{1} << w);
    std::vector<int> window(w);
    for (size_t idx = 0; idx < bits.size(); ++idx) {
        for (int pos = 0; pos < w; ++pos) window[pos] = (idx >> (w - 1 - pos)) & 1;
        bits[idx] = static_cast<uint8_t>(evaluate(c, window).output);
    }
    return TruthTable::make(c.radius, std::move(bits));
}

bool same_function(const NandCircuit& a, const NandCircuit& b) {
    if (a.radius != b.radius) return false;
    return table_of(a).bits == table_of(b).bits;
}

NandCircuit parse_circuit(std::istream& in) {
    std::string line;
    int radius = -1;
    std::vector<std::vector<CircuitArg>> gates;
    int expected = 1;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // tokenize around '=', '[', ']', ','
        for (char& ch : line)
            if (ch == '=' || ch == '[' || ch == ']' || ch == ',') ch = ' ';
        std::istringstream ls(line);
        std::vector<std::string> tokens(std::istream_iterator<std::string>(ls), {});
        if (tokens.empty()) continue;
        if (tokens[0] == "radius") {
            if (tokens.size() != 2) throw ParseError("expected 'radius <r>'");
            radius = std::stoi(tokens[1]);
            continue;
        }
        if (radius < 0) throw ParseError("circuit file must start with 'radius <r>'");
        if (tokens[0] != "s" + std::to_string(expected))
            throw ParseError("expected assignment s" + std::to_string(expected));
        std::vector<CircuitArg> args;
        for (size_t i = 1; i < tokens.size(); ++i) {
            const std::string& tok = tokens[i];
            if (tok.size() < 2 || (tok[0] != 'u' && tok[0] != 's'))
                throw ParseError("bad circuit argument '" + tok + "'");
            int idx;
            try {
                idx = std::stoi(tok.substr(1));
            } catch (const std::exception&) {
                throw ParseError("bad circuit argument '" + tok + "'");
            }
            args.push_back(CircuitArg{tok[0] == 'u' ? CircuitArg::Input : CircuitArg::Assign, idx});
        }
        gates.push_back(std::move(args));
        ++expected;
    }
    if (radius < 0) throw ParseError("circuit file must contain 'radius <r>'");
    try {
        return NandCircuit::make(radius, std::move(gates));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_circuit(const NandCircuit& c) {
    std::ostringstream out;
    out << "radius " << c.radius << "\n";
    for (size_t j = 0; j < c.gates.size(); ++j) {
        out << "s" << (j + 1) << " = [";
        for (size_t i = 0; i < c.gates[j].size(); ++i) {
            const CircuitArg& a = c.gates[j][i];
            out << (i ? ", " : " ") << (a.kind == CircuitArg::Input ? 'u' : 's') << a.index;
        }
        out << " ]\n";
    }
    return out.str();
}

}  // namespace sgame
