#include "cli.hpp"

#include "sheafloc/moduli.hpp"
#include "sheafloc/render.hpp"
#include "sheafloc/space_homology.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace sheafloc::cli {

namespace {

enum class Format { text, json, csv };

void add_format(CLI::App* sub, Format& fmt) {
    sub->add_option("--format", fmt, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}},
            CLI::ignore_case));
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

struct PartitionPair {
    std::string alpha;
    std::string beta;
};

void add_partition_pair(CLI::App* sub, PartitionPair& p) {
    sub->add_option("--alpha", p.alpha, "Partition, e.g. \"1^2 3^1\" or \"[3,1,1]\"; empty for the empty partition");
    sub->add_option("--beta", p.beta, "Partition, same syntax as --alpha");
}

std::string component_line(const ComponentContribution& c) {
    return "l=" + std::to_string(c.component.l) + " alpha=" + to_exponent_string(c.component.alpha) +
           " beta=" + to_exponent_string(c.component.beta) + " shift=" + std::to_string(c.shift) +
           " poincare=" + to_polynomial_string(c.homology);
}

void emit_components_csv(std::ostream& out, const std::vector<ComponentContribution>& cs) {
    out << "l,alpha,beta,shift,poincare\n";
    for (const auto& c : cs) {
        out << c.component.l << ',' << csv_quote(to_exponent_string(c.component.alpha)) << ','
            << csv_quote(to_exponent_string(c.component.beta)) << ',' << c.shift << ','
            << csv_quote(to_polynomial_string(c.homology)) << '\n';
    }
}

void warn_below_strata(std::ostream& err, const ChernInvariants& chern, const LWindow& window) {
    const auto bound = stratum_lower_bound(chern.lprime);
    if (window.min < bound) {
        err << "note: l-window starts below ceil(-l'/2) = " << bound
            << "; the formula is evaluated there without filtering\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const ShiftFunction& closed) {
    CLI::App app{"Rational Betti numbers of framed rank-two sheaves on a ruled surface over an elliptic curve",
                 "sheafloc"};
    app.require_subcommand(1);

    Format fmt = Format::text;
    std::function<int()> action;

    // betti / components
    std::int64_t lprime = 0, l_min = 0, l_max = 0;
    unsigned c2 = 0;
    bool verbose = false;
    auto* betti = app.add_subcommand("betti", "Poincare polynomial of the moduli space over an l-window");
    auto* components = app.add_subcommand("components", "Fixed components with their shifts and homology");
    for (auto* sub : {betti, components}) {
        sub->add_option("--lprime", lprime, "c1 = -l' sigma")->required();
        sub->add_option("--c2", c2, "Second Chern class")->required()->check(CLI::Range(0u, kMaxWeight));
        sub->add_option("--l-min", l_min, "Lower end of the l-window")->required();
        sub->add_option("--l-max", l_max, "Upper end of the l-window")->required();
        add_format(sub, fmt);
    }
    betti->add_flag("--verbose,-v", verbose, "Also print the per-component breakdown");

    betti->callback([&] {
        action = [&] {
            const ChernInvariants chern{lprime, c2};
            const LWindow window(l_min, l_max);
            warn_below_strata(err, chern, window);
            if (fmt == Format::json) {
                const auto cs = betti_contributions(chern, window);
                GradedDims total;
                for (const auto& c : cs) total = direct_sum(total, c.shifted());
                out << dump(betti_report_json(chern, window, cs, total));
                return kOk;
            }
            if (verbose) {
                const auto cs = betti_contributions(chern, window);
                if (fmt == Format::csv) {
                    emit_components_csv(out, cs);
                    out << '\n';
                } else {
                    for (const auto& c : cs) out << component_line(c) << '\n';
                }
            }
            const GradedDims total = betti_table(chern, window);
            out << (fmt == Format::csv ? to_csv(total) : to_polynomial_string(total) + "\n");
            return kOk;
        };
    });

    components->callback([&] {
        action = [&] {
            const ChernInvariants chern{lprime, c2};
            const LWindow window(l_min, l_max);
            warn_below_strata(err, chern, window);
            const auto cs = betti_contributions(chern, window);
            if (fmt == Format::json) {
                Json arr = Json::array();
                for (const auto& c : cs) {
                    arr.push_back({{"l", c.component.l},
                                   {"alpha", to_json(c.component.alpha)},
                                   {"beta", to_json(c.component.beta)},
                                   {"shift", c.shift},
                                   {"poincare", to_json(c.homology)}});
                }
                out << dump(arr);
            } else if (fmt == Format::csv) {
                emit_components_csv(out, cs);
            } else {
                for (const auto& c : cs) out << component_line(c) << '\n';
            }
            return kOk;
        };
    });

    // verify
    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Check the closed-form shift against weight counting");
    verify->add_option("--max-c2", vopts.max_c2, "Largest |alpha| + |beta| swept")
        ->check(CLI::Range(0u, kMaxWeight));
    verify->add_option("--l-range", vopts.l_range, "Sweep l over [-R, R]")->check(CLI::NonNegativeNumber);
    verify->add_option("--lprime-range", vopts.lprime_range, "Sweep l' over [-R, R]")
        ->check(CLI::NonNegativeNumber);
    add_format(verify, fmt);
    verify->callback([&] {
        action = [&] {
            const VerifyReport r = run_verify(vopts, closed);
            if (fmt == Format::json) {
                Json j;
                j["ok"] = r.ok();
                j["cases"] = r.cases;
                j["mismatches"] = r.mismatches;
                j["first_counterexample"] = r.first_counterexample ? Json(*r.first_counterexample) : Json(nullptr);
                out << dump(j);
            } else if (fmt == Format::csv) {
                out << "ok,cases,mismatches\n" << (r.ok() ? "true" : "false") << ',' << r.cases << ','
                    << r.mismatches << '\n';
            } else {
                out << (r.ok() ? "OK: " : "FAIL: ") << r.mismatches << " mismatches / " << r.cases << " cases\n";
            }
            if (r.first_counterexample) err << "first counterexample: " << *r.first_counterexample << '\n';
            return r.ok() ? kOk : kDomainError;
        };
    });

    // shift-index
    PartitionPair pp;
    std::int64_t l = 0;
    bool use_oracle = false;
    std::int64_t w1 = 1, w2 = 2, w3 = 10;
    auto* shift_cmd = app.add_subcommand("shift-index", "Homological shift d(alpha, beta, l, l')");
    add_partition_pair(shift_cmd, pp);
    shift_cmd->add_option("--l", l, "Splitting degree l");
    shift_cmd->add_option("--lprime", lprime, "c1 = -l' sigma");
    shift_cmd->add_flag("--oracle", use_oracle, "Count negative weights instead of using the closed form");
    add_format(shift_cmd, fmt);

    // weights
    auto* weights_cmd = app.add_subcommand("weights", "Normal-direction torus weights at a fixed point");
    add_partition_pair(weights_cmd, pp);
    weights_cmd->add_option("--l", l, "Splitting degree l");
    weights_cmd->add_option("--lprime", lprime, "c1 = -l' sigma");
    add_format(weights_cmd, fmt);
    unsigned pushforward_k = 0, conormal_k = 0;
    auto* pushforward_opt =
        weights_cmd->add_option("--pushforward", pushforward_k, "List weights of pi_* O(k sigma) instead");
    auto* conormal_opt = weights_cmd->add_option("--conormal", conormal_k, "Print the weight of I_D^k/I_D^{k+1}");
    pushforward_opt->excludes(conormal_opt);

    for (auto* sub : {shift_cmd, weights_cmd}) {
        sub->add_option("--w1", w1, "Weight w1");
        sub->add_option("--w2", w2, "Weight w2");
        sub->add_option("--w3", w3, "Weight w3");
    }

    shift_cmd->callback([&] {
        action = [&] {
            const ShiftInput in{parse_partition(pp.alpha), parse_partition(pp.beta), l, lprime};
            const unsigned d = use_oracle ? shift_oracle(in, WeightTriple(w1, w2, w3)) : shift_closed(in);
            if (fmt == Format::json) {
                out << dump(Json{{"alpha", to_json(in.alpha)},
                                 {"beta", to_json(in.beta)},
                                 {"l", in.l},
                                 {"lprime", in.lprime},
                                 {"shift", d}});
            } else if (fmt == Format::csv) {
                out << "shift\n" << d << '\n';
            } else {
                out << d << '\n';
            }
            return kOk;
        };
    });

    weights_cmd->callback([&] {
        action = [&] {
            if (*pushforward_opt) {
                const auto ws = pushforward_weights(pushforward_k);
                if (fmt == Format::json) {
                    Json arr = Json::array();
                    for (const auto& tw : ws) arr.push_back({{"twist", tw.twist}, {"weight", tw.weight}});
                    out << dump(arr);
                } else {
                    if (fmt == Format::csv) out << "twist,weight\n";
                    for (const auto& tw : ws) {
                        if (fmt == Format::csv) out << tw.twist << ',' << tw.weight << '\n';
                        else out << "L^" << tw.twist << " weight " << tw.weight << '\n';
                    }
                }
                return kOk;
            }
            if (*conormal_opt) {
                const auto w = conormal_weight(conormal_k);
                if (fmt == Format::json) out << dump(Json{{"k", conormal_k}, {"weight", w}});
                else if (fmt == Format::csv) out << "k,weight\n" << conormal_k << ',' << w << '\n';
                else out << w << '\n';
                return kOk;
            }
            const WeightTriple triple(w1, w2, w3);
            const auto ms = ext_weight_families(parse_partition(pp.alpha), parse_partition(pp.beta), l, lprime, triple);
            if (fmt == Format::json) {
                out << dump(Json{{"weights", to_json(ms)}, {"negative_count", negative_count(ms)}});
            } else if (fmt == Format::csv) {
                out << "weight,multiplicity\n";
                for (const auto& [w, m] : ms.entries()) out << w << ',' << m << '\n';
            } else {
                out << to_text(ms) << "negative: " << negative_count(ms) << '\n';
            }
            return kOk;
        };
    });

    // symprod
    auto* symprod = app.add_subcommand("symprod", "Betti numbers of Sym^alpha C x Sym^beta C");
    add_partition_pair(symprod, pp);
    add_format(symprod, fmt);
    symprod->callback([&] {
        action = [&] {
            const GradedDims g = betti_sym_component(parse_partition(pp.alpha), parse_partition(pp.beta));
            if (fmt == Format::json) out << dump(to_json(g));
            else if (fmt == Format::csv) out << to_csv(g);
            else out << to_polynomial_string(g) << '\n';
            return kOk;
        };
    });

    // macdonald
    unsigned sym_n = 0, genus = 1;
    auto* macdonald = app.add_subcommand("macdonald", "Betti numbers of Sym^n C from the generating function");
    macdonald->add_option("--n", sym_n, "Symmetric power")->required();
    macdonald->add_option("--genus", genus, "Curve genus");
    add_format(macdonald, fmt);
    macdonald->callback([&] {
        action = [&] {
            const GradedDims g = macdonald_sym(sym_n, CurveGenus{genus});
            if (fmt == Format::json) out << dump(to_json(g));
            else if (fmt == Format::csv) out << to_csv(g);
            else out << to_polynomial_string(g) << '\n';
            return kOk;
        };
    });

    // partitions
    unsigned part_n = 0;
    bool pairs = false;
    auto* partitions = app.add_subcommand("partitions", "Enumerate partitions (or ordered pairs) of n");
    partitions->add_option("--n", part_n, "Total weight")->required();
    partitions->add_flag("--pairs", pairs, "Enumerate pairs (alpha, beta) with |alpha| + |beta| = n");
    add_format(partitions, fmt);
    partitions->callback([&] {
        action = [&] {
            if (pairs) {
                const auto ps = enumerate_pairs(part_n);
                if (fmt == Format::json) {
                    Json arr = Json::array();
                    for (const auto& [a, b] : ps) arr.push_back({{"alpha", to_json(a)}, {"beta", to_json(b)}});
                    out << dump(arr);
                } else {
                    if (fmt == Format::csv) out << "alpha,beta\n";
                    for (const auto& [a, b] : ps) {
                        if (fmt == Format::csv) {
                            out << csv_quote(to_part_list_string(a)) << ',' << csv_quote(to_part_list_string(b)) << '\n';
                        } else {
                            out << to_part_list_string(a) << ' ' << to_part_list_string(b) << '\n';
                        }
                    }
                }
                return kOk;
            }
            const auto ps = enumerate_partitions(part_n);
            if (fmt == Format::json) {
                Json arr = Json::array();
                for (const auto& p : ps) arr.push_back(to_json(p));
                out << dump(arr);
            } else {
                if (fmt == Format::csv) out << "partition\n";
                for (const auto& p : ps) {
                    out << (fmt == Format::csv ? csv_quote(to_part_list_string(p)) : to_part_list_string(p)) << '\n';
                }
            }
            return kOk;
        };
    });

    // splitting-types
    int degE = 0;
    std::int64_t fiber_degree = 0;
    auto* splitting = app.add_subcommand("splitting-types", "Enumerate splitting types for fixed Chern data");
    splitting->add_option("--dege", degE, "Degree of E, 0 or 1")->required();
    splitting->add_option("--F", fiber_degree, "Fiber degree d + d' (<= 0)")->required();
    splitting->add_option("--c2", c2, "Second Chern class")->required();
    add_format(splitting, fmt);
    splitting->callback([&] {
        action = [&] {
            const auto types = splitting_types(degE, fiber_degree, c2);
            if (fmt == Format::json) {
                Json arr = Json::array();
                for (const auto& s : types) arr.push_back(to_json(s));
                out << dump(arr);
            } else {
                const char sep = fmt == Format::csv ? ',' : ' ';
                out << "d" << sep << "d'" << sep << "degB1" << sep << "c2I1" << sep << "c2I2\n";
                for (const auto& s : types) {
                    out << s.d << sep << s.dprime << sep << s.degB1 << sep << s.c2I1 << sep << s.c2I2 << '\n';
                }
            }
            return kOk;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    }
    return kDomainError;
}

}  // namespace sheafloc::cli
