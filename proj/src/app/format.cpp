#include "sperp/app/format.hpp"

#include <cstdio>

namespace sperp::app {
namespace {

std::string parts_text(const Partition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out + "]";
}

// Writes |c|·b[λ] with the coefficient omitted when |c| = 1.
std::string magnitude_term(char letter, const Partition& p, const Rational& c) {
    const Rational abs = c.sign() < 0 ? -c : c;
    std::string out = abs.is_one() ? "" : abs.str() + "*";
    return out + letter + parts_text(p);
}

}  // namespace

std::string to_text(const SymFunc& f) {
    if (f.is_zero()) return "0";
    const char letter = basis_letter(f.basis());
    std::string out;
    bool first = true;
    for (const auto& [p, c] : f.terms()) {
        const bool negative = c.sign() < 0;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        out += magnitude_term(letter, p, c);
        first = false;
    }
    return out;
}

nlohmann::json to_json(const SymFunc& f, const std::string& input, const std::string& method, double millis) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, c] : f.terms()) terms.push_back({{"partition", p.parts()}, {"coeff", c.str()}});
    return {{"input", input},
            {"method", method},
            {"basis", std::string(1, basis_letter(f.basis()))},
            {"terms", std::move(terms)},
            {"millis", millis}};
}

SymFunc from_json(const nlohmann::json& j) {
    const std::string b = j.at("basis").get<std::string>();
    const auto basis = b.size() == 1 ? basis_from_letter(b[0]) : std::nullopt;
    if (!basis) throw std::invalid_argument("unknown basis '" + b + "'");
    std::vector<SymFunc::Term> terms;
    for (const auto& t : j.at("terms"))
        terms.emplace_back(Partition(t.at("partition").get<std::vector<int>>()), Rational::parse(t.at("coeff").get<std::string>()));
    return SymFunc::from_terms(*basis, std::move(terms));
}

std::string checksum(const SymFunc& f) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : to_text(f)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string to_text(const Monomials& m) {
    if (m.empty()) return "0";
    std::string out;
    bool first = true;
    // Lexicographically largest exponent vector first.
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        const auto& [exps, c] = *it;
        const bool negative = c.sign() < 0;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        const Rational abs = negative ? -c : c;
        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) out += abs.str();
        else out += (abs.is_one() ? "" : abs.str() + "*") + mono;
        first = false;
    }
    return out;
}

nlohmann::json to_json(const Monomials& m) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = m.rbegin(); it != m.rend(); ++it) terms.push_back({{"exponents", it->first}, {"coeff", it->second.str()}});
    return terms;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace sperp::app
