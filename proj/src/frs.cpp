#include "aidct/frs.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "aidct/checked.hpp"

namespace aidct {

FixedPoint FixedPoint::rounded(int new_frac_bits) const {
    if (new_frac_bits >= frac_bits) {
        return {checked_shl(raw, new_frac_bits - frac_bits), new_frac_bits};
    }
    const int drop = frac_bits - new_frac_bits;
    const std::int64_t half = std::int64_t{1} << (drop - 1);
    const std::int64_t mag = raw >= 0 ? raw : -raw;
    const std::int64_t r = (mag + half) >> drop;
    return {raw >= 0 ? r : -r, new_frac_bits};
}

std::int64_t FastMultiplierProgram::run(std::int64_t x) const {
    std::array<std::int64_t, kMaxRegisters> regs{};
    regs[0] = x;
    for (const MultiplierStep& s : steps) {
        std::int64_t t = checked_shl(regs[s.src1], s.shift1);
        if (s.sign1 < 0) t = checked_neg(t);
        if (s.src2 >= 0) {
            std::int64_t u = checked_shl(regs[s.src2], s.shift2);
            if (s.sign2 < 0) u = checked_neg(u);
            t = checked_add(t, u);
        }
        regs[s.dst] = t;
    }
    return regs[output];
}

int FastMultiplierProgram::addition_count() const {
    int n = 0;
    for (const MultiplierStep& s : steps) {
        if (s.src2 >= 0) ++n;
    }
    return n;
}

int program_adder_bits(const FastMultiplierProgram& p, int input_bits) {
    std::array<int, FastMultiplierProgram::kMaxRegisters> width{};
    width[0] = input_bits;
    int bits = 0;
    for (const MultiplierStep& s : p.steps) {
        const int w1 = width[s.src1] + s.shift1;
        if (s.src2 >= 0) {
            const int w2 = width[s.src2] + s.shift2;
            width[s.dst] = std::max(w1, w2) + 1;
            bits += width[s.dst];
        } else {
            width[s.dst] = w1;
        }
    }
    return bits;
}

namespace {

std::string reg_name(const FastMultiplierProgram& p, int idx) {
    if (idx == 0) return "x";
    if (idx == p.output) return "y";
    return "v" + std::to_string(idx);
}

std::string term_text(const FastMultiplierProgram& p, int reg, int shift) {
    if (shift == 0) return reg_name(p, reg);
    return "(" + reg_name(p, reg) + " << " + std::to_string(shift) + ")";
}

}  // namespace

std::string FastMultiplierProgram::to_text() const {
    std::ostringstream os;
    os << constant << ":";
    bool first = true;
    for (const MultiplierStep& s : steps) {
        os << (first ? " " : "; ");
        first = false;
        os << reg_name(*this, s.dst) << " = ";
        if (s.sign1 < 0) os << "-";
        os << term_text(*this, s.src1, s.shift1);
        if (s.src2 >= 0) {
            os << (s.sign2 < 0 ? " - " : " + ") << term_text(*this, s.src2, s.shift2);
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw std::invalid_argument("aidct: bad multiplier program text near '" + s.substr(i) + "'");
    }
    std::string ident() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) ++i;
        if (i == start) throw std::invalid_argument("aidct: expected identifier in program text");
        return s.substr(start, i - start);
    }
    long number() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("aidct: expected number in program text");
        return std::stol(s.substr(start, i - start));
    }
    bool at_end() {
        skip_ws();
        return i >= s.size();
    }
};

}  // namespace

FastMultiplierProgram FastMultiplierProgram::parse(const std::string& line) {
    FastMultiplierProgram prog;
    Cursor cur{line};
    prog.constant = cur.number();
    cur.expect(':');

    std::vector<std::string> names{"x"};
    auto reg_index = [&](const std::string& name, bool defining) -> int {
        for (std::size_t j = 0; j < names.size(); ++j) {
            if (names[j] == name) return static_cast<int>(j);
        }
        if (!defining) throw std::invalid_argument("aidct: undefined register '" + name + "' in program text");
        names.push_back(name);
        return static_cast<int>(names.size() - 1);
    };
    auto parse_term = [&](int& reg, int& shift) {
        if (cur.eat('(')) {
            reg = reg_index(cur.ident(), false);
            cur.expect('<');
            cur.expect('<');
            shift = static_cast<int>(cur.number());
            cur.expect(')');
        } else {
            reg = reg_index(cur.ident(), false);
            shift = 0;
        }
    };

    while (!cur.at_end()) {
        MultiplierStep s{};
        const std::string dst = cur.ident();
        s.dst = reg_index(dst, true);
        if (dst == "y") prog.output = s.dst;
        cur.expect('=');
        s.sign1 = cur.eat('-') ? -1 : 1;
        parse_term(s.src1, s.shift1);
        if (cur.eat('+')) {
            s.sign2 = 1;
            parse_term(s.src2, s.shift2);
        } else if (cur.eat('-')) {
            s.sign2 = -1;
            parse_term(s.src2, s.shift2);
        } else {
            s.src2 = -1;
            s.shift2 = 0;
            s.sign2 = 1;
        }
        prog.steps.push_back(s);
        if (!cur.eat(';')) break;
    }
    if (!cur.at_end()) throw std::invalid_argument("aidct: trailing garbage in program text");
    if (prog.output == 0) throw std::invalid_argument("aidct: program has no output register y");
    if (names.size() > kMaxRegisters) {
        throw std::invalid_argument("aidct: program uses too many registers");
    }
    return prog;
}

const std::vector<FastMultiplierProgram>& multiplier_table() {
    static const std::vector<FastMultiplierProgram> table = [] {
        const char* rows[] = {
            "669: v1 = x + (x << 1); v2 = v1 - (v1 << 3); y = -v1 - (v2 << 5)",
            "2217: v1 = x + (x << 4); v2 = x + (x << 1); v3 = v1 + (v2 << 3); y = (v1 << 7) + v3",
            "181: v1 = x + (x << 1); v2 = (x << 3) + v1; y = (v1 << 6) - v2",
            "3135: v1 = x + (x << 1); v2 = x - (x << 6); y = (v1 << 10) - v2",
            "473: v1 = x + (x << 2); v2 = x - (v1 << 3); y = (x << 9) + v2",
            "437: v1 = x + (x << 2); v2 = (x << 5) - v1; y = v1 + (v2 << 4)",
            "2399: v1 = x + (x << 2); v2 = x + (v1 << 5); y = (v1 << 9) - v2",
            "8: y = (x << 3)",
        };
        std::vector<FastMultiplierProgram> t;
        for (const char* row : rows) {
            FastMultiplierProgram p = FastMultiplierProgram::parse(row);
            if (p.run(1) != p.constant || p.run(-3) != -3 * p.constant) {
                throw std::logic_error("aidct: multiplier table self-check failed");
            }
            t.push_back(std::move(p));
        }
        return t;
    }();
    return table;
}

const FastMultiplierProgram& program_for(std::int64_t m) {
    for (const FastMultiplierProgram& p : multiplier_table()) {
        if (p.constant == m) return p;
    }
    throw std::invalid_argument("aidct: no shift-add program for constant " + std::to_string(m));
}

std::string multiplier_table_text() {
    std::string out;
    for (const FastMultiplierProgram& p : multiplier_table()) {
        out += p.to_text();
        out += '\n';
    }
    return out;
}

std::vector<FastMultiplierProgram> parse_multiplier_table(const std::string& text) {
    std::vector<FastMultiplierProgram> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(FastMultiplierProgram::parse(line));
    }
    return out;
}

const TwelveBitConstants& twelve_bit_constants() {
    static const TwelveBitConstants k{};
    return k;
}

const DyadicConstant& frs_constant(int q, int p) {
    static const DyadicConstant one{1, 0};
    const TwelveBitConstants& k = twelve_bit_constants();
    // [q][p] multiplies basis(p)*basis(q)
    static const DyadicConstant* grid[4][4] = {
        {&one, &k.z1, &k.z2, &k.z1z2},
        {&k.z1, &k.z1_sq, &k.z1z2, &k.z1sq_z2},
        {&k.z2, &k.z1z2, &k.z2_sq, &k.z1z2_sq},
        {&k.z1z2, &k.z1sq_z2, &k.z1z2_sq, &k.eight},
    };
    if (q < 0 || q > 3 || p < 0 || p > 3) throw std::out_of_range("aidct: frs_constant index");
    return *grid[q][p];
}

FixedPoint frs_dempster(const DoublyEncoded& x) {
    std::int64_t acc = 0;
    for (int q = 0; q < 4; ++q) {
        for (int p = 0; p < 4; ++p) {
            const std::int64_t coord = x.coords[q][p];
            const DyadicConstant& dc = frs_constant(q, p);
            const std::int64_t prod =
                (dc.numerator == 1) ? coord : program_for(dc.numerator).run(coord);
            acc = checked_add(acc, checked_shl(prod, kFrsFracBits - dc.shift));
        }
    }
    return {acc, kFrsFracBits};
}

Z4Element compute_y(const DoublyEncoded& x) {
    const auto& c = x.coords;
    enum { A, B, C, D };

    std::int64_t ya = checked_add(c[B][B], c[C][C]);
    ya = checked_add(c[A][A], checked_shl(ya, 2));
    ya = checked_add(ya, checked_shl(c[D][D], 3));

    std::int64_t pair_sum = checked_add(checked_add(c[B][D], c[C][D]), checked_add(c[D][B], c[D][C]));
    std::int64_t yb = checked_add(checked_add(c[A][B], c[B][A]), checked_shl(pair_sum, 1));

    std::int64_t pair_diff = checked_add(checked_sub(c[B][D], c[C][D]), checked_sub(c[D][B], c[D][C]));
    std::int64_t yc = checked_add(checked_add(c[A][C], c[C][A]), checked_shl(pair_diff, 1));

    std::int64_t yd = checked_add(c[A][D], checked_add(c[B][B], c[B][C]));
    yd = checked_add(yd, checked_sub(c[C][B], c[C][C]));
    yd = checked_add(yd, c[D][A]);

    return {ya, yb, yc, yd};
}

ExpansionFactorSet expansion_set_large() { return {167.2309, {437, 181, 473}, 7}; }
ExpansionFactorSet expansion_set_small() { return {4.5961, {12, 5, 13}, 5}; }

CseResult cse_combine(std::int64_t yb, std::int64_t yc, std::int64_t yd,
                      const ExpansionFactorSet& set) {
    CseResult r{};
    if (set.m == std::array<std::int64_t, 3>{437, 181, 473}) {
        const std::int64_t t1 = checked_add(yb, yc);
        ++r.additions;
        const std::int64_t t2 = checked_add(t1, yd);
        ++r.additions;
        // 473*t2 = (t2 << 9) - (t2 << 5) - (t2 << 3) + t2
        std::int64_t p473 = checked_sub(checked_shl(t2, 9), checked_shl(t2, 5));
        ++r.additions;
        p473 = checked_sub(p473, checked_shl(t2, 3));
        ++r.additions;
        p473 = checked_add(p473, t2);
        ++r.additions;
        // 36*t1 = (t1 << 5) + (t1 << 2)
        const std::int64_t p36 = checked_add(checked_shl(t1, 5), checked_shl(t1, 2));
        ++r.additions;
        r.value = checked_sub(p473, p36);
        ++r.additions;
        r.value = checked_sub(r.value, checked_shl(yc, 8));
        ++r.additions;
    } else if (set.m == std::array<std::int64_t, 3>{12, 5, 13}) {
        const std::int64_t t1 = checked_add(yb, yd);
        ++r.additions;
        const std::int64_t t2 = checked_add(t1, yc);
        ++r.additions;
        r.value = checked_add(checked_shl(t1, 3), checked_shl(t2, 2));
        ++r.additions;
        r.value = checked_add(r.value, yd);
        ++r.additions;
        r.value = checked_add(r.value, yc);
        ++r.additions;
    } else {
        throw std::invalid_argument("aidct: no factored schedule for this expansion set");
    }
    return r;
}

namespace {

// Largest power of two not exceeding r (r > 0).
int floor_exponent(double r) { return std::ilogb(r); }

std::vector<BoothTerm> booth_floor(double value, int max_terms, double& residual) {
    std::vector<BoothTerm> terms;
    double r = value;
    while (static_cast<int>(terms.size()) < max_terms && r > 0.0) {
        const int e = floor_exponent(r);
        if (e < -60) break;
        terms.push_back({e, false});
        r -= std::ldexp(1.0, e);
    }
    residual = r;
    return terms;
}

std::vector<BoothTerm> booth_nearest(double value, int max_terms, double& residual) {
    std::vector<BoothTerm> terms;
    double r = value;
    while (static_cast<int>(terms.size()) < max_terms && r != 0.0) {
        const double ar = std::abs(r);
        int e = floor_exponent(ar);
        if (ar > 1.5 * std::ldexp(1.0, e)) ++e;
        if (e < -60) break;
        const bool neg = r < 0.0;
        terms.push_back({e, neg});
        r -= neg ? -std::ldexp(1.0, e) : std::ldexp(1.0, e);
    }
    residual = r;
    return terms;
}

}  // namespace

std::vector<BoothTerm> booth_encode(double value, int max_terms) {
    if (!(value > 0.0)) throw std::invalid_argument("aidct: booth_encode requires a positive value");
    if (max_terms < 1) throw std::invalid_argument("aidct: booth_encode requires max_terms >= 1");
    double res_floor = 0.0;
    double res_near = 0.0;
    std::vector<BoothTerm> a = booth_floor(value, max_terms, res_floor);
    std::vector<BoothTerm> b = booth_nearest(value, max_terms, res_near);
    if (std::abs(res_near) < std::abs(res_floor)) return b;
    return a;
}

double booth_value(const std::vector<BoothTerm>& terms) {
    double v = 0.0;
    for (const BoothTerm& t : terms) {
        v += t.negative ? -std::ldexp(1.0, t.exponent) : std::ldexp(1.0, t.exponent);
    }
    return v;
}

FrsConfig FrsConfig::dempster_config() {
    FrsConfig cfg;
    cfg.method = Method::dempster;
    return cfg;
}

FrsConfig FrsConfig::expansion_config(const ExpansionFactorSet& set, bool inverse_alpha) {
    FrsConfig cfg;
    cfg.method = Method::expansion;
    cfg.factors = set;
    cfg.apply_inverse_alpha = inverse_alpha;
    return cfg;
}

FixedPoint frs_expansion_raw(const DoublyEncoded& x, const ExpansionFactorSet& set) {
    const Z4Element y = compute_y(x);
    const CseResult cse = cse_combine(y.b, y.c, y.d, set);
    const std::vector<BoothTerm> terms = booth_encode(set.alpha, set.booth_terms);

    std::int64_t acc = 0;
    for (const BoothTerm& t : terms) {
        const int sh = kFrsFracBits + t.exponent;
        if (sh < 0) throw std::domain_error("aidct: booth term finer than the working scale");
        const std::int64_t v = checked_shl(y.a, sh);
        acc = t.negative ? checked_sub(acc, v) : checked_add(acc, v);
    }
    acc = checked_add(acc, checked_shl(cse.value, kFrsFracBits));
    return {acc, kFrsFracBits};
}

double frs_expansion(const DoublyEncoded& x, const FrsConfig& cfg) {
    if (cfg.method != FrsConfig::Method::expansion || !cfg.factors) {
        throw std::invalid_argument("aidct: frs_expansion needs an expansion config with a factor set");
    }
    const double v = frs_expansion_raw(x, *cfg.factors).to_double();
    return cfg.apply_inverse_alpha ? v / cfg.factors->alpha : v;
}

double frs_value(const DoublyEncoded& x, const FrsConfig& cfg) {
    if (cfg.method == FrsConfig::Method::dempster) return frs_dempster(x).to_double();
    return frs_expansion(x, cfg);
}

CoefficientDecoder CoefficientDecoder::exact_decoder(unsigned precision) {
    CoefficientDecoder d;
    d.exact = true;
    d.exact_precision = precision;
    return d;
}

CoefficientDecoder CoefficientDecoder::dempster_decoder() {
    CoefficientDecoder d;
    d.frs = FrsConfig::dempster_config();
    return d;
}

CoefficientDecoder CoefficientDecoder::expansion_decoder(const ExpansionFactorSet& set,
                                                         bool inverse_alpha) {
    CoefficientDecoder d;
    d.frs = FrsConfig::expansion_config(set, inverse_alpha);
    return d;
}

double CoefficientDecoder::apply(const DoublyEncoded& x, const DecodeContext* exact_ctx) const {
    if (exact) {
        if (exact_ctx != nullptr) return decode_exact(x, *exact_ctx).to_double();
        return decode_exact(x, exact_precision).to_double();
    }
    return frs_value(x, frs);
}

std::string CoefficientDecoder::id() const {
    if (exact) return "exact";
    if (frs.method == FrsConfig::Method::dempster) return "dempster";
    const auto& m = frs.factors->m;
    return "expansion{" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
           std::to_string(m[2]) + "}";
}

}  // namespace aidct
