#include "weld/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

namespace weld {

namespace {

struct IdInfo {
    int over_seen = 0;
    int under_seen = 0;
    CrossingSign sign = CrossingSign::Plus;
    bool sign_set = false;
};

}  // namespace

GaussCode GaussCode::from_symbols(std::vector<GaussSymbol> symbols) {
    std::map<int, IdInfo> ids;
    for (const auto& s : symbols) {
        if (s.crossing_id <= 0)
            throw StructureError("crossing id must be a positive integer");
        IdInfo& info = ids[s.crossing_id];
        if (s.role == Role::Over)
            ++info.over_seen;
        else
            ++info.under_seen;
        if (info.sign_set && info.sign != s.sign)
            throw StructureError("sign mismatch on crossing " + std::to_string(s.crossing_id));
        info.sign = s.sign;
        info.sign_set = true;
    }
    for (const auto& [id, info] : ids) {
        if (info.over_seen + info.under_seen != 2)
            throw StructureError("crossing " + std::to_string(id) +
                                 " must occur exactly twice, found " +
                                 std::to_string(info.over_seen + info.under_seen));
        if (info.over_seen != 1)
            throw StructureError("crossing " + std::to_string(id) +
                                 " needs one Over and one Under occurrence");
    }
    return GaussCode(std::move(symbols));
}

int GaussCode::max_crossing_id() const {
    int m = 0;
    for (const auto& s : symbols_) m = std::max(m, s.crossing_id);
    return m;
}

int GaussCode::writhe() const {
    int w = 0;
    for (const auto& s : symbols_)
        if (s.role == Role::Under) w += sign_value(s.sign);
    return w;
}

GaussCode parse_gauss_code(std::string_view text) {
    std::vector<GaussSymbol> symbols;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        GaussSymbol sym;
        char c = text[i];
        if (c == 'O' || c == 'o')
            sym.role = Role::Over;
        else if (c == 'U' || c == 'u')
            sym.role = Role::Under;
        else
            throw SyntaxError(std::string("expected 'O' or 'U' at offset ") + std::to_string(i));
        ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw SyntaxError("expected crossing id digits at offset " + std::to_string(i));
        long id = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            id = id * 10 + (text[i] - '0');
            if (id > 1000000) throw SyntaxError("crossing id too large at offset " + std::to_string(i));
            ++i;
        }
        if (id == 0) throw SyntaxError("crossing id must be positive");
        sym.crossing_id = static_cast<int>(id);
        if (i >= n || (text[i] != '+' && text[i] != '-'))
            throw SyntaxError("expected '+' or '-' at offset " + std::to_string(i));
        sym.sign = text[i] == '+' ? CrossingSign::Plus : CrossingSign::Minus;
        ++i;
        symbols.push_back(sym);
    }
    return GaussCode::from_symbols(std::move(symbols));
}

std::string to_string(const GaussCode& code) {
    std::ostringstream os;
    for (const auto& s : code.symbols()) {
        os << (s.role == Role::Over ? 'O' : 'U') << s.crossing_id
           << (s.sign == CrossingSign::Plus ? '+' : '-');
    }
    return os.str();
}

GaussCode apply_symmetry(const GaussCode& code, SymmetryOp op) {
    std::vector<GaussSymbol> out(code.symbols().begin(), code.symbols().end());
    switch (op) {
        case SymmetryOp::Reverse:
            std::reverse(out.begin(), out.end());
            break;
        case SymmetryOp::MirrorStar:
            for (auto& s : out) {
                s.role = s.role == Role::Over ? Role::Under : Role::Over;
                s.sign = opposite(s.sign);
            }
            break;
        case SymmetryOp::VReflect:
            for (auto& s : out) s.sign = opposite(s.sign);
            break;
    }
    return GaussCode::from_symbols(std::move(out));
}

GaussCode reverse_vreflect(const GaussCode& code) {
    return apply_symmetry(apply_symmetry(code, SymmetryOp::VReflect), SymmetryOp::Reverse);
}

GaussCode reverse_mirror(const GaussCode& code) {
    return apply_symmetry(apply_symmetry(code, SymmetryOp::MirrorStar), SymmetryOp::Reverse);
}

namespace {

// (role, relabeled id, sign) with Over < Under and Plus < Minus.
std::tuple<int, int, int> symbol_key(const GaussSymbol& s, int relabeled_id) {
    return {s.role == Role::Over ? 0 : 1, relabeled_id,
            s.sign == CrossingSign::Plus ? 0 : 1};
}

std::vector<GaussSymbol> rotated_relabeled(std::span<const GaussSymbol> symbols, size_t start) {
    const size_t n = symbols.size();
    std::vector<GaussSymbol> out;
    out.reserve(n);
    std::map<int, int> relabel;
    for (size_t k = 0; k < n; ++k) {
        GaussSymbol s = symbols[(start + k) % n];
        auto it = relabel.try_emplace(s.crossing_id, static_cast<int>(relabel.size()) + 1).first;
        s.crossing_id = it->second;
        out.push_back(s);
    }
    return out;
}

bool lex_less(const std::vector<GaussSymbol>& a, const std::vector<GaussSymbol>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        auto ka = symbol_key(a[i], a[i].crossing_id);
        auto kb = symbol_key(b[i], b[i].crossing_id);
        if (ka != kb) return ka < kb;
    }
    return false;
}

}  // namespace

GaussCode canonical(const GaussCode& code) {
    if (code.empty()) return code;
    const size_t n = code.size();
    std::vector<GaussSymbol> best = rotated_relabeled(code.symbols(), 0);
    for (size_t r = 1; r < n; ++r) {
        std::vector<GaussSymbol> cand = rotated_relabeled(code.symbols(), r);
        if (lex_less(cand, best)) best = std::move(cand);
    }
    return GaussCode::from_symbols(std::move(best));
}

}  // namespace weld
