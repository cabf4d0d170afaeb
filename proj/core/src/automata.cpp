#include "sgame/automata.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace sgame {

size_t CellularAutomaton::window_index(const std::vector<int>& window) const {
    size_t idx = 0;
    for (int s : window) idx = idx * alphabet + static_cast<size_t>(s);
    return idx;
}

int CellularAutomaton::apply(const std::vector<int>& window) const {
    if (static_cast<int>(window.size()) != 2 * radius + 1)
        throw std::invalid_argument("window width must be 2r+1");
    for (int s : window)
        if (s < 0 || s >= alphabet) throw std::invalid_argument("symbol outside alphabet");
    if (!table.empty()) return table[window_index(window)];
    return rule(window);
}

static void check_blank_preserving(const CellularAutomaton& c) {
    std::vector<int> blanks(2 * c.radius + 1, c.blank);
    if (c.apply(blanks) != c.blank)
        throw std::invalid_argument("rule must preserve the blank symbol");
}

CellularAutomaton CellularAutomaton::from_table(int alphabet, int blank, int radius,
                                                std::vector<int> table) {
    if (alphabet < 1 || blank < 0 || blank >= alphabet || radius < 0)
        throw std::invalid_argument("bad automaton parameters");
    size_t expect = 1;
    for (int i = 0; i < 2 * radius + 1; ++i) expect *= static_cast<size_t>(alphabet);
    if (table.size() != expect)
        throw std::invalid_argument("table must have alphabet^(2r+1) entries");
    for (int s : table)
        if (s < 0 || s >= alphabet) throw std::invalid_argument("table symbol outside alphabet");
    CellularAutomaton c;
    c.alphabet = alphabet;
    c.blank = blank;
    c.radius = radius;
    c.table = std::move(table);
    check_blank_preserving(c);
    return c;
}

CellularAutomaton CellularAutomaton::procedural(int alphabet, int blank, int radius,
                                                std::function<int(const std::vector<int>&)> rule) {
    if (alphabet < 1 || blank < 0 || blank >= alphabet || radius < 0)
        throw std::invalid_argument("bad automaton parameters");
    CellularAutomaton c;
    c.alphabet = alphabet;
    c.blank = blank;
    c.radius = radius;
    c.rule = std::move(rule);
    check_blank_preserving(c);
    return c;
}

Configuration Configuration::from_cells(long long base, std::vector<int> cells, int blank) {
    size_t lo = 0, hi = cells.size();
    while (lo < hi && cells[lo] == blank) ++lo;
    while (hi > lo && cells[hi - 1] == blank) --hi;
    Configuration conf;
    conf.base = base + static_cast<long long>(lo);
    conf.cells.assign(cells.begin() + lo, cells.begin() + hi);
    if (conf.cells.empty()) conf.base = 0;
    return conf;
}

int Configuration::at(long long u, int blank) const {
    if (u < base || u >= base + static_cast<long long>(cells.size())) return blank;
    return cells[u - base];
}

Configuration ca_step(const CellularAutomaton& c, const Configuration& conf) {
    if (conf.cells.empty()) return conf;
    long long lo = conf.base - c.radius;
    long long hi = conf.base + static_cast<long long>(conf.cells.size()) + c.radius;
    std::vector<int> out;
    out.reserve(hi - lo);
    std::vector<int> window(2 * c.radius + 1);
    for (long long u = lo; u < hi; ++u) {
        for (int d = -c.radius; d <= c.radius; ++d)
            window[d + c.radius] = conf.at(u + d, c.blank);
        out.push_back(c.apply(window));
    }
    return Configuration::from_cells(lo, std::move(out), c.blank);
}

Configuration ca_run(const CellularAutomaton& c, Configuration conf, long long steps) {
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    for (long long t = 0; t < steps; ++t) conf = ca_step(c, conf);
    return conf;
}

// --- Turing machines -------------------------------------------------------

TuringMachine TuringMachine::make(int q, int ell, std::vector<TmRule> rules) {
    if (q < 3) throw std::invalid_argument("need at least states 1..3");
    if (ell <= 1) throw std::invalid_argument("blank symbol must exceed 1");
    if (rules.size() != static_cast<size_t>((q + 1) * (ell + 1)))
        throw std::invalid_argument("rule array has wrong size");
    TuringMachine m;
    m.q = q;
    m.ell = ell;
    m.rules = std::move(rules);
    for (int s = 1; s <= q; ++s) {
        if (m.halted(s)) continue;
        for (int a = 0; a <= ell; ++a) {
            const TmRule& r = m.rules[s * (ell + 1) + a];
            if (r.state < 1 || r.state > q || r.write < 0 || r.write > ell ||
                (r.dir != 1 && r.dir != -1))
                throw std::invalid_argument("transition table is not total on state " +
                                            std::to_string(s));
        }
    }
    return m;
}

const TmRule& TuringMachine::rule(int state, int symbol) const {
    return rules[state * (ell + 1) + symbol];
}

TuringMachine parse_tm(std::istream& in) {
    std::string line;
    int q = -1, alpha = -1;
    struct RawRule { int s, a, s2, a2, dir; };
    std::vector<RawRule> raw;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "states") {
            if (!(ls >> q)) throw ParseError("expected 'states <q>'");
        } else if (tag == "tapealpha") {
            if (!(ls >> alpha)) throw ParseError("expected 'tapealpha <size>'");
        } else if (tag == "d") {
            RawRule r;
            std::string arrow, dir;
            if (!(ls >> r.s >> r.a >> arrow >> r.s2 >> r.a2 >> dir) || arrow != "->")
                throw ParseError("expected 'd <s> <a> -> <s2> <a2> <L|R>'");
            if (dir == "L") r.dir = -1;
            else if (dir == "R") r.dir = 1;
            else throw ParseError("direction must be L or R");
            raw.push_back(r);
        } else {
            throw ParseError("unknown machine line tag '" + tag + "'");
        }
    }
    if (q < 0 || alpha < 0) throw ParseError("machine file needs 'states' and 'tapealpha'");
    int ell = alpha - 1;
    std::vector<TmRule> rules((q + 1) * alpha);
    std::vector<char> seen((q + 1) * alpha, 0);
    for (const auto& r : raw) {
        if (r.s < 1 || r.s > q || r.a < 0 || r.a > ell)
            throw ParseError("transition source out of range");
        if (seen[r.s * alpha + r.a]) throw ParseError("duplicate transition");
        seen[r.s * alpha + r.a] = 1;
        rules[r.s * alpha + r.a] = TmRule{r.s2, r.a2, r.dir};
    }
    for (int s = 1; s <= q; ++s) {
        if (s == 2 || s == 3) continue;
        for (int a = 0; a <= ell; ++a)
            if (!seen[s * alpha + a])
                throw ParseError("missing transition for state " + std::to_string(s) +
                                 " symbol " + std::to_string(a));
    }
    try {
        return TuringMachine::make(q, ell, std::move(rules));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

TuringMachine parse_tm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_tm(in);
}

int TmConfiguration::at(long long u, int blank) const {
    if (u < base || u >= base + static_cast<long long>(cells.size())) return blank;
    return cells[u - base];
}

TmConfiguration tm_start_configuration(const TuringMachine& m, const std::string& input) {
    TmConfiguration c;
    c.state = 1;
    c.head = 0;
    c.base = 0;
    for (char ch : input) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("input must be binary");
        c.cells.push_back(ch - '0');
    }
    return c;
}

TmConfiguration tm_step(const TuringMachine& m, const TmConfiguration& c) {
    if (m.halted(c.state)) return c;
    TmConfiguration n = c;
    // grow the stored window so the head cell and its target are materialized
    while (n.head < n.base) {
        n.cells.insert(n.cells.begin(), m.ell);
        --n.base;
    }
    while (n.head >= n.base + static_cast<long long>(n.cells.size()))
        n.cells.push_back(m.ell);
    const TmRule& r = m.rule(c.state, n.cells[n.head - n.base]);
    n.cells[n.head - n.base] = r.write;
    n.state = r.state;
    n.head += r.dir;
    return n;
}

TmRunResult tm_run(const TuringMachine& m, const std::string& input, long long max_steps) {
    TmRunResult res;
    res.conf = tm_start_configuration(m, input);
    while (res.steps < max_steps && !m.halted(res.conf.state)) {
        res.conf = tm_step(m, res.conf);
        ++res.steps;
    }
    res.status = res.conf.state == 2   ? TmStatus::Accept
                 : res.conf.state == 3 ? TmStatus::Reject
                                       : TmStatus::Running;
    return res;
}

// --- TM -> CA --------------------------------------------------------------

int pair_symbol(const TuringMachine& m, int state, int symbol) {
    return state * (m.ell + 1) + symbol;
}

CellularAutomaton tm_to_ca(const TuringMachine& m) {
    const int alpha = (m.q + 1) * (m.ell + 1);
    const int stride = m.ell + 1;
    const int blank = pair_symbol(m, 0, m.ell);
    auto state_of = [stride](int sym) { return sym / stride; };
    auto symbol_of = [stride](int sym) { return sym % stride; };
    // the new center value is forced by where the head is and where it moves:
    //   head on center: it writes and departs (halting states freeze);
    //   head on a neighbor moving toward the center: it arrives carrying the
    //   center's old tape symbol;
    //   otherwise the center keeps its symbol.
    std::vector<int> table;
    table.reserve(static_cast<size_t>(alpha) * alpha * alpha);
    std::vector<int> w(3);
    for (w[0] = 0; w[0] < alpha; ++w[0])
        for (w[1] = 0; w[1] < alpha; ++w[1])
            for (w[2] = 0; w[2] < alpha; ++w[2]) {
                int out;
                int cs = state_of(w[1]);
                if (cs > 0) {
                    if (cs == 2 || cs == 3) {
                        out = w[1];  // halted: configuration is frozen
                    } else {
                        const TmRule& r = m.rule(cs, symbol_of(w[1]));
                        out = pair_symbol(m, 0, r.write);
                    }
                } else {
                    int ls = state_of(w[0]), rs = state_of(w[2]);
                    bool from_left = ls > 0 && ls != 2 && ls != 3 &&
                                     m.rule(ls, symbol_of(w[0])).dir == 1;
                    bool from_right = rs > 0 && rs != 2 && rs != 3 &&
                                      m.rule(rs, symbol_of(w[2])).dir == -1;
                    if (from_left != from_right) {
                        int s = from_left ? m.rule(ls, symbol_of(w[0])).state
                                          : m.rule(rs, symbol_of(w[2])).state;
                        out = pair_symbol(m, s, symbol_of(w[1]));
                    } else {
                        // no arrival, or two heads (unreachable): keep the cell
                        out = w[1];
                    }
                }
                table.push_back(out);
            }
    return CellularAutomaton::from_table(alpha, blank, 1, std::move(table));
}

Configuration encode_tm_config(const TuringMachine& m, const TmConfiguration& c) {
    long long lo = std::min(c.head, c.base);
    long long hi = std::max(c.head + 1, c.base + static_cast<long long>(c.cells.size()));
    std::vector<int> cells;
    cells.reserve(hi - lo);
    for (long long u = lo; u < hi; ++u) {
        int st = u == c.head ? c.state : 0;
        cells.push_back(pair_symbol(m, st, c.at(u, m.ell)));
    }
    return Configuration::from_cells(lo, std::move(cells), pair_symbol(m, 0, m.ell));
}

std::optional<TmConfiguration> decode_tm_config(const TuringMachine& m,
                                                const Configuration& conf) {
    const int stride = m.ell + 1;
    TmConfiguration c;
    c.base = conf.base;
    int heads = 0;
    for (size_t i = 0; i < conf.cells.size(); ++i) {
        int st = conf.cells[i] / stride;
        c.cells.push_back(conf.cells[i] % stride);
        if (st > 0) {
            ++heads;
            c.state = st;
            c.head = conf.base + static_cast<long long>(i);
        }
    }
    if (heads != 1) return std::nullopt;
    return c;
}

CellularAutomaton relabel_ca(const CellularAutomaton& c, const std::vector<int>& pi) {
    const int L = c.alphabet;
    if (static_cast<int>(pi.size()) != L)
        throw std::invalid_argument("relabeling must cover the whole alphabet");
    std::vector<int> inverse(L, -1);
    for (int s = 0; s < L; ++s) {
        if (pi[s] < 0 || pi[s] >= L || inverse[pi[s]] != -1)
            throw std::invalid_argument("relabeling must be a bijection onto 0..L-1");
        inverse[pi[s]] = s;
    }
    if (pi[c.blank] != 0)
        throw std::invalid_argument("relabeling must send the blank to 0");
    if (c.radius != 1) throw std::invalid_argument("relabel_ca expects radius 1");
    std::vector<int> table;
    table.reserve(static_cast<size_t>(L) * L * L);
    std::vector<int> w(3);
    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b)
            for (int d = 0; d < L; ++d) {
                w = {inverse[a], inverse[b], inverse[d]};
                table.push_back(pi[c.apply(w)]);
            }
    return CellularAutomaton::from_table(L, 0, 1, std::move(table));
}

std::vector<int> standard_relabeling(const TuringMachine& m) {
    const int L = (m.q + 1) * (m.ell + 1);
    std::vector<int> pi(L, -1);
    pi[pair_symbol(m, 0, m.ell)] = 0;      // blank
    pi[pair_symbol(m, 1, m.ell)] = 1;      // start state over blank (the seed)
    pi[pair_symbol(m, 0, 1)] = L - 1;      // plain tape symbol 1 (result readout)
    int next = 2;
    for (int s = 0; s < L; ++s)
        if (pi[s] == -1) pi[s] = next++;
    return pi;
}

// --- binary encoding -------------------------------------------------------

std::vector<int> phi_block(int a, int L) {
    if (a < 0 || a >= L) throw std::invalid_argument("symbol out of range");
    std::vector<int> block;
    block.reserve(L + 2);
    for (int i = 0; i < 1 + L - a; ++i) block.push_back(1);
    for (int i = 0; i < a; ++i) block.push_back(0);
    block.push_back(1);
    return block;
}

std::vector<int> phi_encode(const std::vector<int>& word, int L) {
    std::vector<int> bits;
    bits.reserve(word.size() * (L + 2));
    for (int a : word) {
        std::vector<int> block = phi_block(a, L);
        bits.insert(bits.end(), block.begin(), block.end());
    }
    return bits;
}

Configuration phi_encode_config(const Configuration& conf, int L) {
    if (conf.cells.empty()) return Configuration{};
    std::vector<int> bits = phi_encode(conf.cells, L);
    return Configuration::from_cells(conf.base * (L + 2), std::move(bits), 1);
}

RestoreResult restore_window(const std::vector<int>& window, int L) {
    const int r = 2 * (L + 2);
    const int n = static_cast<int>(window.size());
    if (n != 2 * r + 1) throw std::invalid_argument("window width must be 2r+1 with r=2(L+2)");
    // a maximal zero run of phi(a) occupies block offsets 1+L-a .. L, so any
    // zero followed by a visible one sits at block offset L; anchor on the
    // such zero nearest to the center
    int best = -1;
    for (int e = 0; e + 1 < n; ++e) {
        if (window[e] == 0 && window[e + 1] == 1) {
            if (best < 0 || std::abs(e - r) < std::abs(best - r)) best = e;
        }
    }
    if (best < 0) {
        // no zero at all, or only runs truncated by the window edge; both
        // happen exactly when the three blocks around the center are blank
        return AllBlank{};
    }
    int k = ((r - best + L) % (L + 2) + (L + 2)) % (L + 2);
    int bstart = r - k;  // window coordinate of the center block's bit 0
    Restored res;
    res.offset = k;
    for (int blk = -1; blk <= 1; ++blk) {
        int s = bstart + blk * (L + 2);
        if (s < 0 || s + L + 2 > n) return Unrestorable{};
        int zeros = 0;
        for (int i = 0; i < L + 2; ++i) zeros += window[s + i] == 0;
        if (zeros >= L) return Unrestorable{};
        std::vector<int> expect = phi_block(zeros, L);
        for (int i = 0; i < L + 2; ++i)
            if (window[s + i] != expect[i]) return Unrestorable{};
        res.symbols[blk + 1] = zeros;
    }
    return res;
}

CellularAutomaton ca_to_2ca(const CellularAutomaton& c) {
    if (c.radius != 1 || c.blank != 0)
        throw std::invalid_argument("binary lowering expects a radius-1 automaton with blank 0");
    const int L = c.alphabet;
    const int r = 2 * (L + 2);
    CellularAutomaton src = c;  // captured by value
    auto rule = [src, L](const std::vector<int>& window) -> int {
        RestoreResult res = restore_window(window, L);
        if (std::holds_alternative<Restored>(res)) {
            const Restored& d = std::get<Restored>(res);
            int out = src.apply({d.symbols[0], d.symbols[1], d.symbols[2]});
            return phi_block(out, L)[d.offset];
        }
        // blank neighborhoods map to blank encodings; unrestorable windows
        // never occur on encoded configurations, output 1 keeps them inert
        return 1;
    };
    return CellularAutomaton::procedural(2, 1, r, std::move(rule));
}

CellularAutomaton parse_rule_table(std::istream& in) {
    std::string line;
    std::vector<std::pair<std::vector<int>, int>> entries;
    int width = -1;
    int max_symbol = 0;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens(std::istream_iterator<std::string>(ls), {});
        if (tokens.empty()) continue;
        auto arrow = std::find(tokens.begin(), tokens.end(), "->");
        if (arrow == tokens.end() || arrow + 2 != tokens.end())
            throw ParseError("expected '<window> -> <symbol>'");
        auto to_symbol = [](const std::string& tok) {
            size_t used = 0;
            int v;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw ParseError("not a symbol: '" + tok + "'");
            }
            if (used != tok.size()) throw ParseError("not a symbol: '" + tok + "'");
            return v;
        };
        std::vector<int> window;
        for (auto it = tokens.begin(); it != arrow; ++it) window.push_back(to_symbol(*it));
        int out = to_symbol(tokens.back());
        if (width < 0) width = static_cast<int>(window.size());
        if (static_cast<int>(window.size()) != width)
            throw ParseError("inconsistent window width");
        for (int s : window) max_symbol = std::max(max_symbol, s);
        max_symbol = std::max(max_symbol, out);
        entries.emplace_back(std::move(window), out);
    }
    if (width <= 0 || width % 2 == 0) throw ParseError("window width must be odd");
    int radius = (width - 1) / 2;
    int alphabet = max_symbol + 1;
    size_t expect = 1;
    for (int i = 0; i < width; ++i) expect *= static_cast<size_t>(alphabet);
    if (entries.size() != expect)
        throw ParseError("rule table must cover every window exactly once");
    std::vector<int> table(expect, -1);
    CellularAutomaton probe;
    probe.alphabet = alphabet;
    for (auto& [window, out] : entries) {
        for (int s : window)
            if (s < 0) throw ParseError("negative symbol");
        size_t idx = probe.window_index(window);
        if (table[idx] != -1) throw ParseError("duplicate window in rule table");
        table[idx] = out;
    }
    // binary tables follow the blank-1 convention, larger alphabets blank-0
    int blank = alphabet == 2 ? 1 : 0;
    try {
        return CellularAutomaton::from_table(alphabet, blank, radius, std::move(table));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

CellularAutomaton parse_rule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_rule_table(in);
}

std::string format_configuration(const Configuration& conf, int blank,
                                 long long lo, long long hi) {
    // single-digit alphabets print as a compact string, wider ones spaced
    bool wide = blank > 9;
    for (int s : conf.cells) wide = wide || s > 9;
    std::ostringstream out;
    for (long long u = lo; u <= hi; ++u) {
        if (wide && u > lo) out << ' ';
        out << conf.at(u, blank);
    }
    return out.str();
}

}  // namespace sgame
