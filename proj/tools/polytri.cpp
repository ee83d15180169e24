// polytri: query and search tool for trinomial polycyclic codes.
//
// Exit codes: 0 success, 2 when a table verification reports INCONSISTENT,
// 1 on error.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "polytri/search.hpp"

using namespace polytri;
using nlohmann::json;

namespace {

enum class Format { Tsv, Json, Md };

struct Common {
    std::string field = "2";
    std::string format = "tsv";
    unsigned long long budget = 0;  // 0 = use default / env

    const Field& F() const { return Field::parse(field); }
    Format fmt() const {
        if (format == "json") return Format::Json;
        if (format == "md") return Format::Md;
        return Format::Tsv;
    }
    unsigned long long budget_or(unsigned long long def) const {
        if (budget) return budget;
        if (const char* env = std::getenv("POLYTRINOM_BUDGET"))
            return std::strtoull(env, nullptr, 10);
        return def;
    }
};

void add_common(CLI::App* cmd, Common& c, bool with_field = true) {
    if (with_field)
        cmd->add_option("--field", c.field, "field descriptor, e.g. 3 or 2^2");
    cmd->add_option("--format", c.format, "tsv|json|md")
        ->check(CLI::IsMember({"tsv", "json", "md"}));
    cmd->add_option("--budget", c.budget,
                    "enumeration budget (overrides POLYTRINOM_BUDGET)");
}

/// Emits a list of uniform records in the selected format.
void emit(Format fmt, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows) {
    if (fmt == Format::Json) {
        json out = json::array();
        for (const auto& row : rows) {
            json o;
            for (std::size_t j = 0; j < header.size(); ++j) o[header[j]] = row[j];
            out.push_back(std::move(o));
        }
        std::cout << out.dump(2) << "\n";
        return;
    }
    const char* sep = fmt == Format::Md ? " | " : "\t";
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t j = 0; j < cells.size(); ++j)
            std::cout << (j ? sep : (fmt == Format::Md ? "| " : ""))
                      << cells[j];
        if (fmt == Format::Md) std::cout << " |";
        std::cout << "\n";
    };
    line(header);
    if (fmt == Format::Md) {
        std::vector<std::string> dashes(header.size(), "---");
        line(dashes);
    }
    for (const auto& row : rows) line(row);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string dist_str(const DistanceResult& d) {
    return std::to_string(d.d) + (d.exact ? "" : " (upper bound)");
}

int cmd_verify_table(const Common& c, int id, const std::string& csv) {
    TableReport rep = verify_table(id, csv, c.budget_or(10000000ULL));
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rep.rows)
        rows.push_back({std::to_string(r.row), r.params, r.verdict, r.note});
    emit(c.fmt(), {"row", "params", "verdict", "note"}, rows);
    return rep.all_consistent() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trinomial polycyclic code toolkit"};
    app.require_subcommand(1);

    // ---- field ----
    Common field_c;
    auto* field_cmd = app.add_subcommand("field", "field queries");
    auto* field_info = field_cmd->add_subcommand("info", "field structure");
    add_common(field_info, field_c);

    // ---- poly ----
    Common poly_c;
    std::string poly_text;
    auto* poly_cmd = app.add_subcommand("poly", "polynomial queries");
    std::map<std::string, CLI::App*> poly_sub;
    for (const char* name :
         {"factor", "ord", "sord", "reciprocal", "classify"}) {
        auto* s = poly_cmd->add_subcommand(name);
        add_common(s, poly_c);
        s->add_option("--poly", poly_text, "ascending compact coefficients")
            ->required();
        poly_sub[name] = s;
    }

    // ---- tri ----
    Common tri_c;
    std::string tri_text, tri2_text, bindiv_text;
    auto* tri_cmd = app.add_subcommand("tri", "trinomial queries");
    std::map<std::string, CLI::App*> tri_sub;
    for (const char* name :
         {"multiplicity", "gcd", "partner", "revcount", "sqrt", "bindiv"}) {
        auto* s = tri_cmd->add_subcommand(name);
        add_common(s, tri_c);
        if (std::string(name) == "bindiv") {
            s->add_option("--pair", bindiv_text, "\"nA a mB b\"")->required();
        } else {
            s->add_option("--tri", tri_text, "\"n i a b\"")->required();
            if (std::string(name) == "gcd")
                s->add_option("--tri2", tri2_text, "\"n i a b\"")->required();
        }
        tri_sub[name] = s;
    }

    // ---- code ----
    Common code_c;
    std::string code_tri, code_gen;
    long long expand_i = 2;
    auto* code_cmd = app.add_subcommand("code", "polycyclic code analysis");
    std::map<std::string, CLI::App*> code_sub;
    for (const char* name : {"info", "distance", "props", "reverse", "expand"}) {
        auto* s = code_cmd->add_subcommand(name);
        add_common(s, code_c);
        s->add_option("--tri", code_tri, "modulus trinomial \"n i a b\"")
            ->required();
        s->add_option("--gen", code_gen, "generator, ascending compact")
            ->required();
        if (std::string(name) == "expand")
            s->add_option("--i", expand_i, "expansion index");
        code_sub[name] = s;
    }

    // ---- qp ----
    Common qp_c;
    std::string qp_tri, qp_gen, qp_blocks;
    auto* qp_cmd = app.add_subcommand("qp", "quasi-polycyclic codes");
    std::map<std::string, CLI::App*> qp_sub;
    for (const char* name : {"build", "eval"}) {
        auto* s = qp_cmd->add_subcommand(name);
        add_common(s, qp_c);
        s->add_option("--tri", qp_tri, "modulus trinomial \"n i a b\"")
            ->required();
        s->add_option("--gen", qp_gen, "generator, ascending compact")
            ->required();
        s->add_option("--blocks", qp_blocks, "comma-separated block polys")
            ->required();
        qp_sub[name] = s;
    }

    // ---- css ----
    Common css_c;
    std::string css_tri, css_g1, css_h2, css_g2;
    auto* css_cmd = app.add_subcommand("css", "CSS quantum codes");
    std::map<std::string, CLI::App*> css_sub;
    for (const char* name : {"build", "eval", "search"}) {
        auto* s = css_cmd->add_subcommand(name);
        add_common(s, css_c);
        s->add_option("--tri", css_tri, "modulus trinomial \"n i a b\"")
            ->required();
        if (std::string(name) != "search") {
            s->add_option("--g1", css_g1, "inner generator")->required();
            s->add_option("--h2", css_h2, "check polynomial of the outer code");
            s->add_option("--g2", css_g2, "outer generator (alternative)");
        }
        css_sub[name] = s;
    }

    // ---- search ----
    Common search_c;
    SearchFilters filters;
    long long n_lo = 2, n_hi = 1;
    std::string store, checkpoint, job_id = "cli";
    auto* search_cmd = app.add_subcommand("search", "exhaustive code search");
    add_common(search_cmd, search_c);
    search_cmd->add_option("--nmin", n_lo)->required();
    search_cmd->add_option("--nmax", n_hi)->required();
    search_cmd->add_flag("--reversible", filters.reversible);
    search_cmd->add_flag("--self-orthogonal", filters.self_orthogonal);
    search_cmd->add_flag("--self-dual", filters.self_dual);
    search_cmd->add_flag("--dual-containing", filters.dual_containing);
    search_cmd->add_flag("--isodual-candidate", filters.isodual_candidate);
    search_cmd->add_option("--min-d", filters.min_d);
    search_cmd->add_option("--store", store, "append-only JSONL output path");
    search_cmd->add_option("--checkpoint", checkpoint, "checkpoint file path");
    search_cmd->add_option("--job", job_id, "job id recorded per line");

    // ---- conjecture ----
    Common conj_c;
    std::string conj_id;
    long long conj_nmax = 10;
    auto* conj_cmd = app.add_subcommand("conjecture", "conjecture harness");
    add_common(conj_cmd, conj_c);
    conj_cmd->add_option("id", conj_id, "C3.6|C4.1|C4.2|C4.5|C4.6|C4.10|C4.11")
        ->required();
    conj_cmd->add_option("--nmax", conj_nmax);

    // ---- verify-table ----
    Common table_c;
    int table_id = 1;
    std::string table_csv;
    auto* table_cmd = app.add_subcommand("verify-table", "re-derive a table");
    add_common(table_cmd, table_c, false);
    table_cmd->add_option("id", table_id, "table id 1-6")->required();
    table_cmd->add_option("csv", table_csv, "CSV transcription path")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*field_info) {
            const Field& F = field_c.F();
            std::string mod;
            for (auto c : F.modulus()) mod += std::to_string(int(c));
            emit(field_c.fmt(), {"q", "p", "w", "modulus", "generator"},
                 {{F.descriptor(), std::to_string(F.p()), std::to_string(F.w()),
                   mod, F.format(F.generator())}});
            return 0;
        }

        if (poly_cmd->parsed()) {
            const Field& F = poly_c.F();
            Poly f = parse_poly_compact(F, poly_text);
            if (*poly_sub["factor"]) {
                auto fac = factor(f);
                std::vector<std::vector<std::string>> rows;
                for (const auto& [p, m] : fac.factors)
                    rows.push_back({format_poly_compact(p), std::to_string(m)});
                emit(poly_c.fmt(), {"factor", "multiplicity"}, rows);
            } else if (*poly_sub["ord"]) {
                emit(poly_c.fmt(), {"ord"}, {{std::to_string(ord(f))}});
            } else if (*poly_sub["sord"]) {
                auto [e, a] = sord(f);
                emit(poly_c.fmt(), {"sord", "constant"},
                     {{std::to_string(e), F.format(a)}});
            } else if (*poly_sub["reciprocal"]) {
                emit(poly_c.fmt(), {"reciprocal", "monic_reciprocal"},
                     {{format_poly_compact(reciprocal(f)),
                       f.coeff(0) == 0
                           ? std::string("-")
                           : format_poly_compact(monic_reciprocal(f))}});
            } else if (*poly_sub["classify"]) {
                auto cls = classify_reciprocal(f);
                const char* tag =
                    cls.tag == ReciprocalTag::SelfReciprocal  ? "self"
                    : cls.tag == ReciprocalTag::SemiReciprocal ? "semi"
                                                               : "plain";
                emit(poly_c.fmt(), {"class", "divisible_by_x"},
                     {{tag, yn(cls.divisible_by_x)}});
            }
            return 0;
        }

        if (tri_cmd->parsed()) {
            const Field& F = tri_c.F();
            if (*tri_sub["bindiv"]) {
                std::istringstream in(bindiv_text);
                long long nA, mB;
                std::string a, b;
                if (!(in >> nA >> a >> mB >> b))
                    throw ParseError("expected \"nA a mB b\"");
                bool ok = binomial_divides(F, nA, F.parse_elem(a), mB,
                                           F.parse_elem(b));
                emit(tri_c.fmt(), {"divides"}, {{yn(ok)}});
                return 0;
            }
            Trinomial t = parse_trinomial_quad(F, tri_text);
            if (*tri_sub["multiplicity"]) {
                auto prof = multiplicity_profile(t);
                std::vector<std::vector<std::string>> rows;
                for (const auto& [m, desc] : prof.predicted)
                    rows.push_back({to_string(prof.verdict), std::to_string(m),
                                    desc});
                if (rows.empty())
                    rows.push_back({to_string(prof.verdict), "-", "-"});
                emit(tri_c.fmt(), {"verdict", "multiplicity", "classes"}, rows);
            } else if (*tri_sub["gcd"]) {
                Trinomial t2 = parse_trinomial_quad(F, tri2_text);
                emit(tri_c.fmt(), {"gcd"},
                     {{format_poly_compact(trinomial_gcd(t, t2))}});
            } else if (*tri_sub["partner"]) {
                emit(tri_c.fmt(), {"partner"}, {{partner(t).name()}});
            } else if (*tri_sub["revcount"]) {
                auto rd = reversible_count(t.poly());
                emit(tri_c.fmt(), {"count", "strict_count", "brute_count"},
                     {{std::to_string(rd.count), std::to_string(rd.strict_count),
                       std::to_string(rd.brute_count)}});
            } else if (*tri_sub["sqrt"]) {
                auto root = trinomial_sqrt(F, t.n, t.i, t.a, t.b);
                emit(tri_c.fmt(), {"sqrt"},
                     {{root ? format_poly_compact(*root) : "-"}});
            }
            return 0;
        }

        if (code_cmd->parsed()) {
            const Field& F = code_c.F();
            Trinomial t = parse_trinomial_quad(F, code_tri);
            PolycyclicCode C(t.poly(), parse_poly_compact(F, code_gen));
            unsigned long long budget = code_c.budget_or(100000000ULL);
            if (*code_sub["info"]) {
                emit(code_c.fmt(), {"n", "k", "gen"},
                     {{std::to_string(C.n()), std::to_string(C.k()),
                       format_poly_compact(C.gen())}});
            } else if (*code_sub["distance"]) {
                auto d = min_distance(C, budget);
                emit(code_c.fmt(), {"d", "exact", "enumerated"},
                     {{std::to_string(d.d), yn(d.exact),
                       std::to_string(d.enumerated)}});
            } else if (*code_sub["props"]) {
                auto p = properties(C);
                emit(code_c.fmt(),
                     {"self_orthogonal", "self_dual", "dual_containing",
                      "reversible", "isodual_candidate", "isodual_evidence"},
                     {{yn(p.self_orthogonal), yn(p.self_dual),
                       yn(p.dual_containing), yn(p.reversible),
                       yn(p.isodual_candidate),
                       p.isodual_weight_evidence
                           ? yn(*p.isodual_weight_evidence)
                           : "unknown"}});
            } else if (*code_sub["reverse"]) {
                PolycyclicCode R = reversed_code(C);
                emit(code_c.fmt(), {"modulus", "gen"},
                     {{format_poly_compact(R.modulus()),
                       format_poly_compact(R.gen())}});
            } else if (*code_sub["expand"]) {
                PolycyclicCode E = expand_code(C, expand_i);
                emit(code_c.fmt(), {"n", "k", "gen"},
                     {{std::to_string(E.n()), std::to_string(E.k()),
                       format_poly_compact(E.gen())}});
            }
            return 0;
        }

        if (qp_cmd->parsed()) {
            const Field& F = qp_c.F();
            Trinomial t = parse_trinomial_quad(F, qp_tri);
            std::vector<Poly> blocks;
            std::stringstream in(qp_blocks);
            std::string tok;
            while (std::getline(in, tok, ','))
                blocks.push_back(parse_poly_compact(F, tok));
            QpCode Q(t.poly(), parse_poly_compact(F, qp_gen), blocks);
            if (*qp_sub["build"]) {
                std::string flags;
                for (bool c : Q.coprime()) flags += c ? '1' : '0';
                emit(qp_c.fmt(), {"length", "k", "ell", "h", "coprime"},
                     {{std::to_string(Q.length()), std::to_string(Q.dim()),
                       std::to_string(Q.ell()), format_poly_compact(Q.h()),
                       flags}});
            } else {
                auto r = qp_distance_and_bound(Q, qp_c.budget_or(100000000ULL));
                emit(qp_c.fmt(), {"D", "exact", "bound", "base_d"},
                     {{std::to_string(r.D.d), yn(r.D.exact),
                       r.bound ? std::to_string(*r.bound) : "-",
                       dist_str(r.base_d)}});
            }
            return 0;
        }

        if (css_cmd->parsed()) {
            const Field& F = css_c.F();
            Trinomial t = parse_trinomial_quad(F, css_tri);
            Poly mod = t.poly();
            unsigned long long budget = css_c.budget_or(10000000ULL);
            if (*css_sub["search"]) {
                auto divs = monic_divisors(factor(mod), F);
                std::vector<std::vector<std::string>> rows;
                for (const auto& g1 : divs)
                    for (const auto& g2 : divs) {
                        if (g2.degree() <= g1.degree()) continue;
                        if (!divides(g1, g2)) continue;
                        auto cand =
                            css_from_nested(mod, g1, g2, GivenPoly::Generator);
                        auto d = css_distance(cand, budget);
                        rows.push_back(
                            {"[[" + std::to_string(cand.n) + "," +
                                 std::to_string(cand.k) + "," +
                                 std::to_string(d.d) + "]]_" +
                                 cand.label_field,
                             format_poly_compact(g1), format_poly_compact(g2),
                             yn(d.exact)});
                    }
                emit(css_c.fmt(), {"params", "g1", "g2", "exact"}, rows);
                return 0;
            }
            if (css_h2.empty() == css_g2.empty())
                throw Error("provide exactly one of --h2 and --g2");
            auto cand = css_h2.empty()
                            ? css_from_nested(mod, parse_poly_compact(F, css_g1),
                                              parse_poly_compact(F, css_g2),
                                              GivenPoly::Generator)
                            : css_from_nested(mod, parse_poly_compact(F, css_g1),
                                              parse_poly_compact(F, css_h2),
                                              GivenPoly::CheckPoly);
            if (*css_sub["build"]) {
                emit(css_c.fmt(), {"n", "k", "label_field", "g2"},
                     {{std::to_string(cand.n), std::to_string(cand.k),
                       cand.label_field, format_poly_compact(cand.C2.gen())}});
            } else {
                auto d = css_distance(cand, budget);
                emit(css_c.fmt(),
                     {"d", "exact", "side1", "side2", "note"},
                     {{std::to_string(d.d), yn(d.exact),
                       std::to_string(d.side1), std::to_string(d.side2),
                       d.claimed_not_verified
                           ? "claimed (not verified at desk scale)"
                           : ""}});
            }
            return 0;
        }

        if (search_cmd->parsed()) {
            SearchJob job;
            job.field = &search_c.F();
            job.n_lo = n_lo;
            job.n_hi = n_hi;
            job.filters = filters;
            job.budget = search_c.budget_or(1000000ULL);
            job.store_path = store;
            job.checkpoint_path = checkpoint;
            job.job_id = job_id;
            SearchReport rep = search_trinomial_codes(job);
            for (const auto& rec : rep.records) std::cout << rec.dump() << "\n";
            for (const auto& s : rep.skipped)
                std::cerr << "skipped: " << s << "\n";
            return 0;
        }

        if (conj_cmd->parsed()) {
            ConjectureReport rep = run_conjecture(conj_id, conj_c.F(), conj_nmax,
                                                  conj_c.budget_or(1000000ULL));
            std::cout << rep.id << ": " << rep.projection << "\n";
            std::cout << "checked: " << rep.checked
                      << ", hypothesis hits: " << rep.hits << "\n";
            std::cout << (rep.confirmed_in_range()
                              ? "CONFIRMED-in-range"
                              : "COUNTEREXAMPLES FOUND")
                      << "\n";
            for (const auto& c : rep.counterexamples)
                std::cout << "counterexample: " << c << "\n";
            for (const auto& u : rep.unresolved)
                std::cout << "unresolved: " << u << "\n";
            return 0;
        }

        if (table_cmd->parsed())
            return cmd_verify_table(table_c, table_id, table_csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
