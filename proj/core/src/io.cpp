#include "backstable/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace backstable {

using nlohmann::json;

static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

Perm parse_perm(const std::string& text) {
    if (text == "id" || text.empty()) return Perm();
    auto parts = split(text, ':');
    if (parts.size() != 2) throw std::invalid_argument("bad permutation: " + text);
    std::vector<int> vals;
    if (!parts[1].empty())
        for (auto& v : split(parts[1], ',')) vals.push_back(std::stoi(v));
    if (parts[0] == "s") return Perm::from_word(vals);
    return Perm(std::stoi(parts[0]), vals);
}

std::string perm_text(const Perm& w) { return to_string(w); }

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty())
        for (auto& v : split(text, ',')) parts.push_back(std::stoi(v));
    return Partition(parts);
}

std::string partition_text(const Partition& la) {
    std::string out;
    for (int i = 0; i < la.rows(); ++i) {
        if (i) out += ",";
        out += std::to_string(la.parts[i]);
    }
    return out;
}

static json partition_to_json(const Partition& la) {
    return json(la.parts);
}

static Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

static const char* alpha_name(Alpha a) {
    switch (a) {
        case Alpha::X: return "x";
        case Alpha::A: return "a";
        case Alpha::B: return "b";
        case Alpha::Y: return "y";
    }
    throw std::logic_error("bad alphabet");
}

static Alpha alpha_from_name(const std::string& s) {
    if (s == "x") return Alpha::X;
    if (s == "a") return Alpha::A;
    if (s == "b") return Alpha::B;
    if (s == "y") return Alpha::Y;
    throw std::invalid_argument("bad alphabet: " + s);
}

static json poly_to_json(const Poly& f) {
    json terms = json::array();
    for (auto& [m, c] : f.terms()) {
        json vars = json::array();
        for (auto& [v, e] : m.e) {
            json jv;
            if (v.alpha == Alpha::A && v.idx == kDeltaIndex) {
                jv["alpha"] = "delta";
                jv["idx"] = 0;
            } else {
                jv["alpha"] = alpha_name(v.alpha);
                jv["idx"] = v.idx;
            }
            jv["exp"] = e;
            vars.push_back(jv);
        }
        terms.push_back({{"coeff", to_string(c)}, {"vars", vars}});
    }
    return terms;
}

static Poly poly_from_json(const json& j) {
    Poly out;
    for (auto& t : j) {
        Monomial m;
        for (auto& jv : t.at("vars")) {
            std::string an = jv.at("alpha").get<std::string>();
            VarRef v = an == "delta"
                           ? VarRef{Alpha::A, kDeltaIndex}
                           : VarRef{alpha_from_name(an), jv.at("idx").get<int>()};
            m.e.push_back({v, jv.at("exp").get<int>()});
        }
        std::sort(m.e.begin(), m.e.end());
        out.add_term(m, Rat(t.at("coeff").get<std::string>()));
    }
    return out;
}

std::string poly_json(const Poly& f) { return poly_to_json(f).dump(); }

Poly parse_poly_json(const std::string& text) { return poly_from_json(json::parse(text)); }

static const char* basis_name(Basis b) {
    switch (b) {
        case Basis::Schur: return "schur";
        case Basis::H: return "h";
        case Basis::E: return "e";
        case Basis::P: return "p";
        case Basis::Monomial: return "monomial";
    }
    throw std::logic_error("bad basis");
}

static Basis basis_from_name(const std::string& s) {
    if (s == "schur") return Basis::Schur;
    if (s == "h") return Basis::H;
    if (s == "e") return Basis::E;
    if (s == "p") return Basis::P;
    if (s == "monomial") return Basis::Monomial;
    throw std::invalid_argument("bad basis: " + s);
}

static json terms_to_json(const std::map<Partition, Poly>& coeffs) {
    json terms = json::array();
    for (auto& [la, c] : coeffs)
        terms.push_back({{"partition", partition_to_json(la)}, {"coeff", poly_to_json(c)}});
    return terms;
}

std::string symfunc_json(const SymFunc& f) {
    json j;
    j["basis"] = basis_name(f.basis());
    j["terms"] = terms_to_json(f.coeffs());
    return j.dump();
}

SymFunc parse_symfunc_json(const std::string& text) {
    json j = json::parse(text);
    SymFunc out(basis_from_name(j.at("basis").get<std::string>()));
    for (auto& t : j.at("terms"))
        out.add_term(partition_from_json(t.at("partition")), poly_from_json(t.at("coeff")));
    return out;
}

std::string doublesym_json(const DoubleSymFunc& f) {
    json j;
    j["basis"] = "double-schur";
    j["terms"] = terms_to_json(f.coeffs);
    return j.dump();
}

DoubleSymFunc parse_doublesym_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("basis").get<std::string>() != "double-schur")
        throw std::invalid_argument("bad basis for a double symmetric function");
    DoubleSymFunc out;
    for (auto& t : j.at("terms"))
        out.add_term(partition_from_json(t.at("partition")), poly_from_json(t.at("coeff")));
    return out;
}

std::string rep_json(const BackStableRep& rep) {
    json j = json::array();
    for (auto& [key, c] : rep.terms)
        j.push_back({{"partition", partition_to_json(key.first)},
                     {"perm", perm_text(key.second)},
                     {"coeff", to_string(c)}});
    return j.dump();
}

BackStableRep parse_rep_json(const std::string& text) {
    BackStableRep out;
    for (auto& t : json::parse(text))
        out.add_term(partition_from_json(t.at("partition")),
                     parse_perm(t.at("perm").get<std::string>()),
                     Rat(t.at("coeff").get<std::string>()));
    return out;
}

std::string double_rep_json(const DoubleBackStableRep& rep) {
    json j = json::array();
    for (auto& [key, c] : rep.terms)
        j.push_back({{"partition", partition_to_json(key.first)},
                     {"perm", perm_text(key.second)},
                     {"coeff", poly_to_json(c)}});
    return j.dump();
}

DoubleBackStableRep parse_double_rep_json(const std::string& text) {
    DoubleBackStableRep out;
    for (auto& t : json::parse(text))
        out.add_term(partition_from_json(t.at("partition")),
                     parse_perm(t.at("perm").get<std::string>()),
                     poly_from_json(t.at("coeff")));
    return out;
}

std::string dual_series_json(const DualSeries& f) {
    json j;
    j["cap"] = f.cap;
    j["terms"] = terms_to_json(f.coeffs);
    return j.dump();
}

DualSeries parse_dual_series_json(const std::string& text) {
    json j = json::parse(text);
    DualSeries out;
    out.cap = j.at("cap").get<int>();
    for (auto& t : j.at("terms"))
        out.add_term(partition_from_json(t.at("partition")), poly_from_json(t.at("coeff")));
    return out;
}

std::string pipedream_json(const BumplessPipedream& d) {
    using V = BumplessPipedream::Variant;
    json j;
    j["variant"] = d.variant == V::Square ? "square"
                   : d.variant == V::Rect ? "rect"
                                          : "halfplane";
    j["rows"] = {d.rlo, d.rhi};
    j["cols"] = {d.clo, d.chi};
    if (d.variant == V::Halfplane)
        j["shape"] = partition_to_json(d.shape);
    else
        j["perm"] = perm_text(d.perm);
    std::vector<std::string> rows;
    auto lines = split(render(d), '\n');
    rows.assign(lines.begin() + 1, lines.end());
    j["grid"] = rows;
    return j.dump();
}

BumplessPipedream parse_pipedream_json(const std::string& text) {
    json j = json::parse(text);
    std::ostringstream os;
    os << j.at("variant").get<std::string>();
    os << ";" << j.at("rows")[0].get<int>() << ":" << j.at("rows")[1].get<int>();
    os << ";" << j.at("cols")[0].get<int>() << ":" << j.at("cols")[1].get<int>() << ";";
    if (j.contains("shape")) {
        Partition sh = partition_from_json(j.at("shape"));
        os << (sh.rows() == 0 ? "-" : partition_text(sh));
    } else {
        os << j.at("perm").get<std::string>();
    }
    for (auto& row : j.at("grid")) os << "\n" << row.get<std::string>();
    return parse_pipedream(os.str());
}

std::string localized_class_json(const LocalizedClass& c) {
    json entries = json::array();
    for (auto& [w, f] : c.entries)
        entries.push_back({{"perm", perm_text(w)}, {"value", poly_to_json(f)}});
    json j;
    j["label"] = perm_text(c.label);
    j["entries"] = entries;
    return j.dump();
}

LocalizedClass parse_localized_class_json(const std::string& text) {
    json j = json::parse(text);
    LocalizedClass out;
    out.label = parse_perm(j.at("label").get<std::string>());
    for (auto& e : j.at("entries"))
        out.entries[parse_perm(e.at("perm").get<std::string>())] =
            poly_from_json(e.at("value"));
    return out;
}

std::string localized_class_csv(const LocalizedClass& c) {
    std::ostringstream os;
    os << "perm,value\n";
    for (auto& [w, f] : c.entries)
        os << "\"" << perm_text(w) << "\",\"" << to_string(f) << "\"\n";
    return os.str();
}

std::string nilhecke_json(const NilHeckeElement& x) {
    json j = json::array();
    for (auto& [w, c] : x.terms)
        j.push_back({{"perm", perm_text(w)}, {"coeff", poly_to_json(c)}});
    return j.dump();
}

NilHeckeElement parse_nilhecke_json(const std::string& text) {
    NilHeckeElement out;
    for (auto& t : json::parse(text))
        out.add_term(parse_perm(t.at("perm").get<std::string>()),
                     poly_from_json(t.at("coeff")));
    return out;
}

}  // namespace backstable
