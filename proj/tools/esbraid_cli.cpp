// esbraid: braid-group representation engine over exact cyclotomic
// arithmetic. Subcommands evaluate link invariants, run verification
// suites, analyze finite braid images, and decompose representations.
//
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 input error, 3 a size cap was exceeded.

#include "esbraid/braid.hpp"
#include "esbraid/chars.hpp"
#include "esbraid/esgroup.hpp"
#include "esbraid/invariants.hpp"
#include "esbraid/linalg.hpp"
#include "esbraid/rep.hpp"
#include "esbraid/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

namespace {

using esbraid::Cyclo;
using json = nlohmann::ordered_json;

std::string q_str(const mpq_class& q) { return q.get_str(); }

json cyclo_json(const Cyclo& v) {
    return json{{"c0", q_str(v.coeff(0))},
                {"c1", q_str(v.coeff(1))},
                {"c2", q_str(v.coeff(2))},
                {"c3", q_str(v.coeff(3))}};
}

json cyclo_approx_json(const Cyclo& v) {
    const auto z = v.approx();
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json report_json(const esbraid::CheckReport& rep) {
    json checks = json::array();
    for (const auto& item : rep.items) {
        json j{{"name", item.name}};
        if (item.skipped)
            j["skipped"] = true;
        else
            j["pass"] = item.pass;
        checks.push_back(std::move(j));
    }
    return json{{"all_pass", rep.all_pass()}, {"checks", std::move(checks)}};
}

int run_invariant(const std::string& word_text, int strands, int alpha, bool approx) {
    const esbraid::BraidWord word = esbraid::BraidWord::parse(word_text, strands);
    const esbraid::LinkInvariants inv = esbraid::link_invariants(word);
    json out{{"word", inv.word},
             {"strands", inv.strands},
             {"exponent_sum", inv.exponent_sum},
             {"components", inv.components},
             {"t_r_plus", cyclo_json(inv.t_r_plus)},
             {"t_r_minus", cyclo_json(inv.t_r_minus)},
             {"j4", cyclo_json(inv.j4)},
             {"arf", json{{"defined", inv.arf.defined}}}};
    if (inv.arf.defined) out["arf"]["value"] = inv.arf.value;
    if (alpha != 0) {
        out["alpha"] = alpha;
        out["t_r"] = cyclo_json(alpha > 0 ? inv.t_r_plus : inv.t_r_minus);
    }
    if (approx) {
        out["j4_approx"] = cyclo_approx_json(inv.j4);
        out["t_r_plus_approx"] = cyclo_approx_json(inv.t_r_plus);
        out["t_r_minus_approx"] = cyclo_approx_json(inv.t_r_minus);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& suite, int max_n) {
    esbraid::CheckReport rep;
    if (suite == "ybe") {
        rep.add("yang-baxter r", esbraid::yang_baxter_holds(esbraid::r_matrix()));
        rep.add("yang-baxter r-tl", esbraid::yang_baxter_holds(esbraid::r_matrix_tl()));
    } else if (suite == "braid") {
        for (esbraid::RepKind kind :
             {esbraid::RepKind::Pi, esbraid::RepKind::PiPrime, esbraid::RepKind::Rho1Hat}) {
            const auto sub = esbraid::verify_braid_relations(kind, max_n);
            rep.items.insert(rep.items.end(), sub.items.begin(), sub.items.end());
        }
    } else if (suite == "lemma22") {
        for (int n = 2; n <= max_n; ++n) {
            const auto sub = esbraid::verify_lemma22(n);
            for (const auto& item : sub.items) {
                auto copy = item;
                copy.name += " n=" + std::to_string(n);
                rep.items.push_back(std::move(copy));
            }
        }
    } else if (suite == "tl") {
        for (int n = 3; n <= max_n; ++n) {
            const auto sub = esbraid::verify_tl_relations(n);
            for (const auto& item : sub.items) {
                auto copy = item;
                copy.name += " n=" + std::to_string(n);
                rep.items.push_back(std::move(copy));
            }
        }
        rep.add("negative-control: quadratic relation fails for the plain generator",
                !esbraid::tl_quadratic_holds(esbraid::r_matrix()));
    } else if (suite == "chars") {
        for (int m = 1; m <= max_n; ++m) {
            for (int nu : {-1, +1}) {
                const auto table = esbraid::CharTable::build(m, nu);
                const std::string tag =
                    " m=" + std::to_string(m) + " nu=" + (nu > 0 ? std::string("+1") : "-1");
                rep.add("row-orthogonality" + tag, table.row_orthogonality_holds());
                rep.add("column-orthogonality" + tag, table.column_orthogonality_holds());
                rep.add("dimension-sum" + tag, table.dims_square_sum_matches());
            }
            if (m % 2 == 0)
                rep.add("restriction m=" + std::to_string(m),
                        esbraid::restriction_check(m / 2));
        }
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    json out{{"suite", suite}, {"max_n", max_n}};
    out.update(report_json(rep));
    std::cout << out.dump(2) << "\n";
    return rep.all_pass() ? 0 : 1;
}

int run_group(int strands, const std::string& kind_name) {
    const esbraid::RepKind kind =
        kind_name == "pi-prime" ? esbraid::RepKind::PiPrime : esbraid::RepKind::Pi;
    const bool with_full = strands <= esbraid::kMaxStrandsFullEnum;
    const auto rep = esbraid::analyze_braid_image(kind, strands, with_full);
    json out{{"strands", rep.strands},
             {"kind", esbraid::rep_kind_name(rep.kind)},
             {"order_H", rep.order_pure},
             {"center_structure", esbraid::center_kind_name(rep.pure_center)},
             {"center_order", rep.pure_center_order},
             {"class_count", rep.pure_class_count}};
    if (rep.full_enumerated) {
        out["order_G"] = rep.order_full;
        out["quotient_order"] = rep.quotient_order;
        out["quotient_well_defined"] = rep.perm_well_defined;
        out["quotient_symmetric"] =
            rep.perm_well_defined && rep.kernel_matches_pure &&
            rep.perm_image_size == rep.quotient_order;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_decompose(int strands) {
    const auto dec = esbraid::decompose_pi(strands);
    json entries = json::array();
    for (const auto& e : dec.entries)
        entries.push_back(json{{"irrep", e.label}, {"dim", e.dim}, {"multiplicity", e.multiplicity}});
    json out{{"strands", dec.strands},
             {"m", dec.m},
             {"nu", dec.nu},
             {"components", std::move(entries)},
             {"zero_multiplicity_irreps", dec.zero_rows},
             {"dimension", json{{"sum", dec.dim_total},
                                {"expected", std::uint64_t{1} << dec.strands}}}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_trace(const std::string& word_text, int strands, const std::string& kind_name,
              bool approx) {
    esbraid::RepKind kind = esbraid::RepKind::Pi;
    if (kind_name == "pi-prime") kind = esbraid::RepKind::PiPrime;
    if (kind_name == "rho1-hat") kind = esbraid::RepKind::Rho1Hat;
    const esbraid::BraidWord word = esbraid::BraidWord::parse(word_text, strands);
    const Cyclo tr = esbraid::evaluate(kind, word).trace();
    json out{{"word", word.str()},
             {"strands", strands},
             {"kind", esbraid::rep_kind_name(kind)},
             {"dim", esbraid::rep_dim(kind, strands)},
             {"trace", cyclo_json(tr)},
             {"trace_text", tr.str()}};
    if (approx) out["trace_approx"] = cyclo_approx_json(tr);
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid representation engine over exact cyclotomic arithmetic"};
    app.require_subcommand(1);

    std::string word_text;
    int strands = 2;
    int alpha = 0;
    bool approx = false;
    std::string suite;
    int max_n = 6;
    std::string kind_name = "pi";

    auto* inv = app.add_subcommand("invariant", "link invariants of a braid closure");
    inv->add_option("--word", word_text, "braid word, e.g. \"s1 s2^-1\"");
    inv->add_option("--strands", strands, "strand count")->required();
    inv->add_option("--alpha", alpha, "report t_r for this alpha (+1 or -1)")
        ->check(CLI::IsMember({-1, 1}));
    inv->add_flag("--approx", approx, "add floating renderings");

    auto* ver = app.add_subcommand("verify", "exact verification suites");
    ver->add_option("--suite", suite, "ybe | braid | lemma22 | tl | chars")->required();
    ver->add_option("--max-n", max_n, "upper strand count / group size parameter");

    auto* grp = app.add_subcommand("group", "finite image of the braid group");
    grp->add_option("--strands", strands, "strand count")->required();
    grp->add_option("--kind", kind_name, "pi | pi-prime")
        ->check(CLI::IsMember({"pi", "pi-prime"}));

    auto* dec = app.add_subcommand("decompose", "irreducible decomposition of the braid representation");
    dec->add_option("--strands", strands, "strand count")->required();

    auto* trc = app.add_subcommand("trace", "exact trace of a braid word image");
    trc->add_option("--word", word_text, "braid word");
    trc->add_option("--strands", strands, "strand count")->required();
    trc->add_option("--kind", kind_name, "pi | pi-prime | rho1-hat")
        ->check(CLI::IsMember({"pi", "pi-prime", "rho1-hat"}));
    trc->add_flag("--approx", approx, "add floating rendering");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (inv->parsed()) return run_invariant(word_text, strands, alpha, approx);
        if (ver->parsed()) return run_verify(suite, max_n);
        if (grp->parsed()) return run_group(strands, kind_name);
        if (dec->parsed()) return run_decompose(strands);
        if (trc->parsed()) return run_trace(word_text, strands, kind_name, approx);
    } catch (const esbraid::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
