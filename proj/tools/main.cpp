#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "backstable/io.hpp"
#include "backstable/verify.hpp"

using namespace backstable;

namespace {

std::string poly_text(const Poly& f) { return to_string(f); }

std::string coeff_text(const Poly& c) {
    std::string s = to_string(c);
    if (c.terms().size() > 1) return "(" + s + ")";
    return s;
}

std::string basis_letter(Basis b) {
    switch (b) {
        case Basis::Schur: return "s";
        case Basis::H: return "h";
        case Basis::E: return "e";
        case Basis::P: return "p";
        case Basis::Monomial: return "m";
    }
    return "?";
}

std::string terms_text(const std::map<Partition, Poly>& coeffs, const std::string& letter) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (auto& [la, c] : coeffs) {
        if (!out.empty()) out += " + ";
        std::string cs = coeff_text(c);
        if (cs != "1") out += cs + "*";
        out += letter + to_string(la);
    }
    return out;
}

std::string expansion_json(const std::map<Partition, Poly>& coeffs) {
    nlohmann::json j = nlohmann::json::array();
    for (auto& [la, c] : coeffs)
        j.push_back({{"partition", la.parts}, {"coeff", nlohmann::json::parse(poly_json(c))}});
    return j.dump();
}

void print_line(const std::string& s) { std::printf("%s\n", s.c_str()); }

Word word_of(const std::string& text) {
    if (text.rfind("s:", 0) != 0)
        throw std::invalid_argument("expected a word form permutation s:i1,i2,...");
    Word out;
    std::string cur;
    for (char ch : text.substr(2)) {
        if (ch == ',') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"back stable Schubert calculus calculator"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "JSON output");

    std::string perm_s, at_s, partition_s, with_s, suite = "all";
    std::vector<int> window, rect;
    int cap = -1, size = 0, arm = 0, leg = 0;
    bool single = false, square = false, rectv = false, halfplane = false, do_render = false;

    auto* c_schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    c_schubert->add_option("--perm", perm_s)->required();
    c_schubert->add_flag("--single", single, "single alphabet instead of double");
    c_schubert->add_option("--window", window, "back stable window p q")->expected(2);

    auto* c_stanley = app.add_subcommand("stanley", "Stanley symmetric function, Schur basis");
    c_stanley->add_option("--perm", perm_s)->required();

    auto* c_dstanley =
        app.add_subcommand("double-stanley", "double Stanley function, double Schur basis");
    c_dstanley->add_option("--perm", perm_s)->required();

    auto* c_dschur = app.add_subcommand("double-schur", "truncated double Schur polynomial");
    c_dschur->add_option("--partition", partition_s)->required();
    c_dschur->add_option("--cap", cap, "truncation size n")->required();

    auto* c_dreams = app.add_subcommand("pipedreams", "enumerate bumpless pipe dreams");
    c_dreams->add_option("--perm", perm_s);
    c_dreams->add_option("--partition", partition_s);
    c_dreams->add_flag("--square", square);
    c_dreams->add_flag("--rect", rectv);
    c_dreams->add_flag("--halfplane", halfplane);
    c_dreams->add_option("--window", window, "square region p q")->expected(2);
    c_dreams->add_option("--size", size, "rectangle / halfplane size n");
    c_dreams->add_flag("--render", do_render);

    auto* c_insert = app.add_subcommand("eg-insert", "insert a reduced word, print P and Q");
    c_insert->add_option("--perm", perm_s, "word form s:i1,...,ik")->required();

    auto* c_localize = app.add_subcommand("localize", "Schubert class localized at a point");
    c_localize->add_option("--perm", perm_s, "class label v")->required();
    c_localize->add_option("--at", at_s, "evaluation point w")->required();

    auto* c_nilhecke = app.add_subcommand("nilhecke", "group element expansion in the A basis");
    c_nilhecke->add_option("--perm", perm_s)->required();
    c_nilhecke->add_option("--cap", cap, "drop lengths above cap");

    auto* c_dual = app.add_subcommand("dual-schur", "dual Schur series up to a degree cap");
    c_dual->add_option("--partition", partition_s)->required();
    c_dual->add_option("--cap", cap)->required();

    auto* c_pieri = app.add_subcommand("pieri", "hook Pieri product on dual Schurs");
    c_pieri->add_option("--partition", partition_s)->required();
    c_pieri->add_option("--p", arm, "leg length p");
    c_pieri->add_option("--q", leg, "arm length q");
    c_pieri->add_option("--cap", cap);

    auto* c_kl = app.add_subcommand("kl", "rectangle-restricted direct sum product");
    c_kl->add_option("--partition", partition_s)->required();
    c_kl->add_option("--with", with_s, "second partition")->required();
    c_kl->add_option("--rect", rect, "rectangle rows cols")->expected(2)->required();
    c_kl->add_option("--cap", cap)->required();

    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    c_verify->add_option("--suite", suite, "suite name or all");
    c_verify->add_option("--size", size, "scale, capped at the certifying size");

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2, help exits 0
    }

    if (c_schubert->parsed()) {
        Perm w = parse_perm(perm_s);
        Poly f = window.empty() ? (single ? schubert_single(w) : schubert_double(w))
                                : backstable_window(w, window[0], window[1], !single);
        print_line(json ? poly_json(f) : poly_text(f));
        return 0;
    }
    if (c_stanley->parsed()) {
        SymFunc f = stanley(parse_perm(perm_s));
        print_line(json ? symfunc_json(f) : terms_text(f.coeffs(), basis_letter(f.basis())));
        return 0;
    }
    if (c_dstanley->parsed()) {
        DoubleSymFunc f = double_stanley(parse_perm(perm_s));
        print_line(json ? doublesym_json(f) : terms_text(f.coeffs, "S"));
        return 0;
    }
    if (c_dschur->parsed()) {
        Poly f = eps_truncate(double_schur(parse_partition(partition_s)), cap);
        print_line(json ? poly_json(f) : poly_text(f));
        return 0;
    }
    if (c_dreams->parsed()) {
        if (square + rectv + halfplane != 1)
            throw std::invalid_argument("choose exactly one of --square --rect --halfplane");
        std::set<BumplessPipedream> dreams;
        if (square) {
            Perm w = parse_perm(perm_s);
            int lo = window.empty() ? std::min(1, w.lo()) : window[0];
            int hi = window.empty() ? std::max(1, w.hi()) : window[1];
            dreams = enumerate_square(w, lo, hi);
        } else if (rectv) {
            dreams = enumerate_rect(parse_perm(perm_s), size);
        } else {
            dreams = enumerate_halfplane(parse_partition(partition_s), size);
        }
        if (json) {
            nlohmann::json j = nlohmann::json::array();
            for (auto& d : dreams) j.push_back(nlohmann::json::parse(pipedream_json(d)));
            print_line(j.dump());
        } else if (do_render) {
            for (auto& d : dreams) print_line(render(d) + "\n");
        } else {
            Poly sum;
            for (auto& d : dreams) sum += weight(d);
            print_line("count: " + std::to_string(dreams.size()));
            print_line("weight: " + poly_text(sum));
        }
        return 0;
    }
    if (c_insert->parsed()) {
        Word word = word_of(perm_s);
        if (!is_reduced(word)) throw std::invalid_argument("word is not reduced");
        auto [p, q] = eg_pq(word);
        if (json) {
            nlohmann::json j;
            j["p"] = nlohmann::json::parse(pipedream_json(p));
            j["q"] = q;
            print_line(j.dump());
        } else {
            print_line(render(p));
            for (auto& row : q) {
                std::string line;
                for (int v : row) line += (line.empty() ? "" : " ") + std::to_string(v);
                print_line(line);
            }
        }
        return 0;
    }
    if (c_localize->parsed()) {
        Poly f = billey_localization(parse_perm(perm_s), parse_perm(at_s));
        print_line(json ? poly_json(f) : poly_text(f));
        return 0;
    }
    if (c_nilhecke->parsed()) {
        NilHeckeElement g = expand_group_element(parse_perm(perm_s), cap);
        if (json) {
            print_line(nilhecke_json(g));
        } else {
            for (auto& [v, c] : g.terms) print_line("A[" + to_string(v) + "]: " + poly_text(c));
        }
        return 0;
    }
    if (c_dual->parsed()) {
        DualSeries f = dual_schur(parse_partition(partition_s), cap);
        if (json) {
            print_line(dual_series_json(f));
        } else {
            print_line("cap: " + std::to_string(f.cap));
            for (auto& [la, c] : f.coeffs) print_line("s" + to_string(la) + ": " + poly_text(c));
        }
        return 0;
    }
    if (c_pieri->parsed()) {
        auto prod = hook_pieri(parse_partition(partition_s), arm, leg, cap);
        if (json) {
            print_line(expansion_json(prod));
        } else {
            for (auto& [la, c] : prod) print_line("hs" + to_string(la) + ": " + poly_text(c));
        }
        return 0;
    }
    if (c_kl->parsed()) {
        auto prod = kl_product(parse_partition(partition_s), parse_partition(with_s), rect[0],
                               rect[1], cap);
        if (json) {
            print_line(expansion_json(prod));
        } else {
            for (auto& [la, c] : prod) print_line("hs" + to_string(la) + ": " + poly_text(c));
        }
        return 0;
    }
    if (c_verify->parsed()) {
        std::vector<std::string> names =
            suite == "all" ? suite_names() : std::vector<std::string>{suite};
        bool ok = true;
        nlohmann::json out = nlohmann::json::array();
        for (auto& name : names) {
            SuiteReport r = run_suite(name, size);
            ok = ok && r.passed();
            if (json) {
                out.push_back({{"name", r.name},
                               {"cases", r.cases},
                               {"failures", r.failures}});
            } else {
                std::printf("[%s] %-15s cases=%ld\n", r.passed() ? "PASS" : "FAIL",
                            r.name.c_str(), r.cases);
                for (auto& f : r.failures) print_line("    counterexample: " + f);
            }
        }
        if (json) print_line(out.dump());
        return ok ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}
