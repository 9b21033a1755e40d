#include "prequant/format.hpp"

#include <algorithm>

#include <json.hpp>

namespace prequant {

std::string format_monomial(const Presentation& pres, const Monomial& m)
{
    std::string s;
    for (int i = 0; i < pres.num_generators(); ++i) {
        int e = m[static_cast<size_t>(i)];
        if (e == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += pres.generator(i).name;
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

namespace {

// Balanced residue: c in (p/2, p) renders as c - p.
long long balanced(Scalar c, Scalar p)
{
    if (p > 2 && c > p / 2)
        return static_cast<long long>(c) - static_cast<long long>(p);
    return static_cast<long long>(c);
}

void append_term(std::string& out, long long coeff, const std::string& body)
{
    bool negative = coeff < 0;
    long long mag = negative ? -coeff : coeff;
    if (out.empty()) {
        if (negative)
            out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (body == "1")
        out += std::to_string(mag);
    else if (mag == 1)
        out += body;
    else
        out += std::to_string(mag) + "*" + body;
}

}  // namespace

namespace {

// Display order: lexicographic in the tuple of leg degrees, then in the
// exponent vectors. Puts x1 (x) y2 ahead of y2 (x) x1.
std::vector<std::pair<TensorMonomial, Scalar>> display_order(const Presentation& pres,
                                                             const TensorElement& e)
{
    std::vector<std::pair<TensorMonomial, Scalar>> terms(e.terms.begin(), e.terms.end());
    auto key = [&](const TensorMonomial& t) {
        std::vector<int> degs;
        for (const auto& m : t)
            degs.push_back(pres.degree(m));
        return degs;
    };
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        auto ka = key(a.first), kb = key(b.first);
        if (ka != kb)
            return ka < kb;
        return a.first < b.first;
    });
    return terms;
}

}  // namespace

std::string format_element(const Presentation& pres, const Element& e, const Style&)
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& [t, c] : display_order(pres, tensor_lift(e)))
        append_term(out, balanced(c, pres.prime()), format_monomial(pres, t[0]));
    return out;
}

std::string format_tensor(const Presentation& pres, const TensorElement& e, const Style& style)
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& [t, c] : display_order(pres, e)) {
        std::string body;
        for (size_t i = 0; i < t.size(); ++i) {
            if (i)
                body += style.tensor();
            body += format_monomial(pres, t[i]);
        }
        append_term(out, balanced(c, pres.prime()), body);
    }
    return out;
}

std::string format_cartan(const CartanPoint& x)
{
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i)
            s += ", ";
        s += x[i].str();
    }
    return s + ")";
}

const char* provenance_name(Provenance p)
{
    switch (p) {
    case Provenance::Computed:
        return "computed";
    case Provenance::Pinned:
        return "pinned";
    case Provenance::TorFormula:
        return "tor-formula";
    }
    return "?";
}

std::string format_l0_text(const L0Result& r)
{
    std::string s = "l0 = " + std::to_string(r.value) + "  [";
    for (size_t i = 0; i < r.breakdown.size(); ++i) {
        const auto& b = r.breakdown[i];
        if (i)
            s += ", ";
        s += "p=" + std::to_string(b.prime) + ": " + std::to_string(b.order) + " (" +
             provenance_name(b.provenance) + ")";
    }
    s += "]";
    if (r.breakdown.empty())
        s = "l0 = " + std::to_string(r.value) + "  [no obstruction primes]";
    for (const auto& b : r.breakdown)
        if (b.provenance == Provenance::Pinned)
            s += "\n  p=" + std::to_string(b.prime) + " pinned(" + b.citation + ")";
    return s;
}

namespace {

nlohmann::ordered_json l0_json_object(const L0Result& r)
{
    nlohmann::ordered_json j;
    j["group"] = to_string(r.group);
    j["l0"] = r.value;
    nlohmann::ordered_json breakdown = nlohmann::ordered_json::array();
    for (const auto& b : r.breakdown) {
        nlohmann::ordered_json item;
        item["prime"] = b.prime;
        item["order"] = b.order;
        item["provenance"] = b.provenance == Provenance::Pinned
                                 ? "pinned(" + b.citation + ")"
                                 : provenance_name(b.provenance);
        breakdown.push_back(item);
    }
    j["breakdown"] = breakdown;
    j["citations"] = r.citations;
    return j;
}

}  // namespace

std::string format_l0_json(const L0Result& r) { return l0_json_object(r).dump(2); }

std::string format_table_text(const std::vector<L0Result>& rows)
{
    std::string s;
    for (const auto& r : rows) {
        std::string name = to_string(r.group);
        name.resize(std::max<size_t>(name.size(), 10), ' ');
        s += name + "  " + format_l0_text(r) + "\n";
    }
    return s;
}

std::string format_table_json(int n_max, const std::vector<L0Result>& rows)
{
    nlohmann::ordered_json j;
    j["max_n"] = n_max;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& r : rows)
        entries.push_back(l0_json_object(r));
    j["entries"] = entries;
    return j.dump(2);
}

std::string verdict_name(MarkedVerdict::Kind k)
{
    switch (k) {
    case MarkedVerdict::Kind::Yes:
        return "YES";
    case MarkedVerdict::Kind::No:
        return "NO";
    case MarkedVerdict::Kind::NecessaryMetSufficiencyOpen:
        return "NECESSARY-MET-SUFFICIENCY-OPEN";
    }
    return "?";
}

}  // namespace prequant
