#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twinwidth/contraction.hpp"
#include "twinwidth/exact.hpp"
#include "twinwidth/io.hpp"
#include "twinwidth/lower_bound.hpp"
#include "twinwidth/neighbourhood.hpp"
#include "twinwidth/trigraph.hpp"

namespace twinwidth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

namespace detail {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw IoFailure("cannot open " + path + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoFailure("failed writing " + path);
    }
}

inline std::vector<VertexId> parse_id_csv(const std::string& csv) {
    std::vector<VertexId> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed vertex list entry: '" + tok + "'");
        }
        if (used != tok.size() || v < 1) {
            throw std::invalid_argument("malformed vertex list entry: '" + tok + "'");
        }
        out.push_back(static_cast<VertexId>(v));
    }
    if (out.empty()) {
        throw std::invalid_argument("vertex list is empty");
    }
    return out;
}

inline std::vector<VertexId> parse_id_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<VertexId> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed vertex id in " + path + ": '" + tok + "'");
        }
        if (used != tok.size() || v < 1) {
            throw std::invalid_argument("malformed vertex id in " + path + ": '" + tok + "'");
        }
        out.push_back(static_cast<VertexId>(v));
    }
    if (out.empty()) {
        throw std::invalid_argument("vertex list in " + path + " is empty");
    }
    return out;
}

inline nlohmann::ordered_json steps_to_json(const ContractionSequence& seq) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ContractionStep& st : seq) {
        arr.push_back({st.survivor, st.merged});
    }
    return arr;
}

}  // namespace detail

/**
 * Runs one toolkit command.  `args` excludes the program name.
 * Exit codes: 0 success, 1 verification failure, 2 usage error,
 * 3 unreadable or unparsable file.
 */
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"twin-width toolkit"};
    app.require_subcommand(1);

    struct GenLbOpts {
        std::optional<int> d;
        std::optional<int> A, B, C;
        int k = 0;
        std::string graph_path;
        std::string seq_path;
        std::string index_path;
        bool json = false;
    } gen;
    CLI::App* gen_cmd = app.add_subcommand("gen-lb", "generate the extremal construction");
    gen_cmd->add_option("--d", gen.d, "target width (picks A, B, C)");
    gen_cmd->add_option("--A", gen.A, "interval length bound");
    gen_cmd->add_option("--B", gen.B, "anchor offset bound");
    gen_cmd->add_option("--C", gen.C, "subset window size");
    gen_cmd->add_option("--k", gen.k, "number of anchor vertices")->required();
    gen_cmd->add_option("--out", gen.graph_path, "output graph file")->required();
    gen_cmd->add_option("--seq", gen.seq_path, "output contraction sequence file")->required();
    gen_cmd->add_option("--index", gen.index_path, "output vertex coordinate file");
    gen_cmd->add_flag("--json", gen.json, "machine-readable report");

    struct VerifySeqOpts {
        std::string graph_path;
        std::string seq_path;
        std::optional<int> budget;
        bool json = false;
    } verify;
    CLI::App* verify_cmd = app.add_subcommand("verify-seq", "replay a contraction sequence");
    verify_cmd->add_option("--graph", verify.graph_path, "graph file")->required();
    verify_cmd->add_option("--seq", verify.seq_path, "sequence file")->required();
    verify_cmd->add_option("--budget", verify.budget, "red degree budget");
    verify_cmd->add_flag("--json", verify.json, "machine-readable report");

    struct ExactOpts {
        std::string graph_path;
        std::string witness_path;
        bool json = false;
    } exact;
    CLI::App* exact_cmd = app.add_subcommand("exact-tww", "exact twin-width by deepening search");
    exact_cmd->add_option("--graph", exact.graph_path, "graph file")->required();
    exact_cmd->add_option("--witness", exact.witness_path, "write an optimal sequence here");
    exact_cmd->add_flag("--json", exact.json, "machine-readable report");

    struct ComplexityOpts {
        std::string graph_path;
        std::string x_csv;
        std::string x_file;
        bool traces = false;
        bool json = false;
    } complexity;
    CLI::App* complexity_cmd =
        app.add_subcommand("complexity", "count distinct neighbourhoods in a vertex set");
    complexity_cmd->add_option("--graph", complexity.graph_path, "graph file")->required();
    complexity_cmd->add_option("--x", complexity.x_csv, "comma-separated vertex ids");
    complexity_cmd->add_option("--x-file", complexity.x_file, "file with one id per line");
    complexity_cmd->add_flag("--traces", complexity.traces, "also print each distinct trace");
    complexity_cmd->add_flag("--json", complexity.json, "machine-readable report");

    struct ShatterOpts {
        std::string graph_path;
        int n = 0;
        bool json = false;
    } shatter;
    CLI::App* shatter_cmd = app.add_subcommand("shatter", "shatter function value at one size");
    shatter_cmd->add_option("--graph", shatter.graph_path, "graph file")->required();
    shatter_cmd->add_option("--n", shatter.n, "sample size")->required();
    shatter_cmd->add_flag("--json", shatter.json, "machine-readable report");

    struct BoundCheckOpts {
        std::string graph_path;
        std::string x_csv;
        std::string x_file;
        int d = 0;
        bool json = false;
    } bound;
    CLI::App* bound_cmd =
        app.add_subcommand("bound-check", "compare a neighbourhood count against the width bound");
    bound_cmd->add_option("--graph", bound.graph_path, "graph file")->required();
    bound_cmd->add_option("--x", bound.x_csv, "comma-separated vertex ids");
    bound_cmd->add_option("--x-file", bound.x_file, "file with one id per line");
    bound_cmd->add_option("--d", bound.d, "claimed width")->required();
    bound_cmd->add_flag("--json", bound.json, "machine-readable report");

    struct GreedyOpts {
        std::string graph_path;
        std::string seq_path;
        bool json = false;
    } greedy;
    CLI::App* greedy_cmd = app.add_subcommand("greedy", "heuristic contraction sequence");
    greedy_cmd->add_option("--graph", greedy.graph_path, "graph file")->required();
    greedy_cmd->add_option("--seq", greedy.seq_path, "write the sequence here");
    greedy_cmd->add_flag("--json", greedy.json, "machine-readable report");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("tww");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const auto pick_x = [](const std::string& csv, const std::string& file) {
        if (csv.empty() == file.empty()) {
            throw std::invalid_argument("exactly one of --x and --x-file is required");
        }
        return csv.empty() ? detail::parse_id_file(file) : detail::parse_id_csv(csv);
    };

    try {
        if (gen_cmd->parsed()) {
            LbParameters params;
            const bool explicit_mode = gen.A || gen.B || gen.C;
            if (explicit_mode) {
                if (!(gen.A && gen.B && gen.C)) {
                    throw std::invalid_argument("--A, --B and --C must be given together");
                }
                params = LbParameters::from_explicit(*gen.A, *gen.B, *gen.C, gen.k);
                params.d = gen.d;  // optional target width, only flagged in the report
            } else {
                if (!gen.d) {
                    throw std::invalid_argument("either --d or all of --A/--B/--C is required");
                }
                params = LbParameters::from_width(*gen.d, gen.k);
            }
            const LbGraph g = build_lb_graph(params);
            const LbSchedule sched = build_lb_schedule(params, g);
            detail::write_file(gen.graph_path, write_graph(g.graph));
            detail::write_file(gen.seq_path, write_sequence(sched.seq));
            if (!gen.index_path.empty()) {
                std::ostringstream ix;
                for (const auto& [v, info] : g.info) {
                    ix << v << " " << info.i << " " << info.j << " " << info.t << " " << info.y_mask
                       << "\n";
                }
                detail::write_file(gen.index_path, ix.str());
            }
            const long long total = g.graph.vertex_count();
            if (gen.json) {
                nlohmann::ordered_json j;
                j["command"] = "gen-lb";
                if (params.d) {
                    j["d"] = *params.d;
                }
                j["A"] = params.A;
                j["B"] = params.B;
                j["C"] = params.C;
                j["k"] = params.k;
                j["M"] = params.M();
                if (params.d) {
                    j["m_within_target"] = params.m_within_target();
                }
                j["vertices"] = total;
                j["edges"] = g.graph.edge_count();
                j["non_x_vertices"] = total - params.k;
                j["triples"] = g.triple_vertices.size();
                j["sequence_steps"] = sched.seq.size();
                j["graph_file"] = gen.graph_path;
                j["seq_file"] = gen.seq_path;
                if (!gen.index_path.empty()) {
                    j["index_file"] = gen.index_path;
                }
                out << j.dump(2) << "\n";
            } else {
                out << "vertices=" << total << " edges=" << g.graph.edge_count()
                    << " non_x=" << (total - params.k) << " triples=" << g.triple_vertices.size()
                    << " M=" << params.M() << " steps=" << sched.seq.size();
                if (params.d) {
                    out << " m_within_target=" << (params.m_within_target() ? "true" : "false");
                }
                out << "\n";
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            const Trigraph g = parse_graph(detail::read_file(verify.graph_path));
            const ContractionSequence seq = parse_sequence(detail::read_file(verify.seq_path));
            const SequenceReport rep = replay_and_verify(g, seq, verify.budget);
            if (verify.json) {
                nlohmann::ordered_json j;
                j["command"] = "verify-seq";
                j["width"] = rep.width;
                j["valid"] = rep.valid;
                j["budget"] = verify.budget ? nlohmann::ordered_json(*verify.budget)
                                            : nlohmann::ordered_json(nullptr);
                if (rep.first_violation) {
                    j["first_violation"] = {{"step", rep.first_violation->step},
                                            {"red_degree", rep.first_violation->red_degree}};
                } else {
                    j["first_violation"] = nullptr;
                }
                if (!rep.error.empty()) {
                    j["error"] = rep.error;
                    j["failed_step"] = rep.failed_step ? nlohmann::ordered_json(*rep.failed_step)
                                                       : nlohmann::ordered_json(nullptr);
                }
                out << j.dump(2) << "\n";
            } else {
                out << "width=" << rep.width << " valid=" << (rep.valid ? "true" : "false") << "\n";
                if (rep.first_violation) {
                    out << "first_violation_step=" << rep.first_violation->step
                        << " red_degree=" << rep.first_violation->red_degree << "\n";
                }
                if (!rep.error.empty()) {
                    out << "error=" << rep.error << "\n";
                }
            }
            return rep.valid ? kExitOk : kExitVerificationFailed;
        }

        if (exact_cmd->parsed()) {
            const Trigraph g = parse_graph(detail::read_file(exact.graph_path));
            const ExactResult res = exact_tww(g);
            if (!exact.witness_path.empty()) {
                detail::write_file(exact.witness_path, write_sequence(res.witness));
            }
            if (exact.json) {
                nlohmann::ordered_json j;
                j["command"] = "exact-tww";
                j["width"] = res.width;
                if (!exact.witness_path.empty()) {
                    j["witness_file"] = exact.witness_path;
                }
                out << j.dump(2) << "\n";
            } else {
                out << "width=" << res.width << "\n";
            }
            return kExitOk;
        }

        if (complexity_cmd->parsed()) {
            const Trigraph g = parse_graph(detail::read_file(complexity.graph_path));
            const std::vector<VertexId> x = pick_x(complexity.x_csv, complexity.x_file);
            const NeighbourhoodProfile prof = distinct_x_neighbourhoods(g, x);
            if (complexity.json) {
                nlohmann::ordered_json j;
                j["command"] = "complexity";
                j["x"] = prof.x_set;
                j["count"] = prof.count;
                if (complexity.traces) {
                    j["traces"] = prof.traces;
                }
                out << j.dump(2) << "\n";
            } else {
                out << "count=" << prof.count << "\n";
                if (complexity.traces) {
                    for (const std::vector<VertexId>& tr : prof.traces) {
                        out << "trace=";
                        for (std::size_t i = 0; i < tr.size(); ++i) {
                            out << (i ? "," : "") << tr[i];
                        }
                        out << "\n";
                    }
                }
            }
            return kExitOk;
        }

        if (shatter_cmd->parsed()) {
            const Trigraph g = parse_graph(detail::read_file(shatter.graph_path));
            const long long value = shatter_function(g, shatter.n);
            if (shatter.json) {
                nlohmann::ordered_json j;
                j["command"] = "shatter";
                j["n"] = shatter.n;
                j["pi"] = value;
                out << j.dump(2) << "\n";
            } else {
                out << "n=" << shatter.n << " pi=" << value << "\n";
            }
            return kExitOk;
        }

        if (bound_cmd->parsed()) {
            const Trigraph g = parse_graph(detail::read_file(bound.graph_path));
            const std::vector<VertexId> x = pick_x(bound.x_csv, bound.x_file);
            const NeighbourhoodProfile prof = distinct_x_neighbourhoods(g, x);
            const long long limit =
                nu_upper_bound(bound.d, static_cast<long long>(prof.x_set.size()));
            const bool pass = prof.count <= limit;
            if (bound.json) {
                nlohmann::ordered_json j;
                j["command"] = "bound-check";
                j["d"] = bound.d;
                j["x_size"] = prof.x_set.size();
                j["count"] = prof.count;
                j["bound"] = limit;
                j["pass"] = pass;
                out << j.dump(2) << "\n";
            } else {
                out << "count=" << prof.count << " bound=" << limit << " "
                    << (pass ? "PASS" : "FAIL") << "\n";
            }
            return pass ? kExitOk : kExitVerificationFailed;
        }

        if (greedy_cmd->parsed()) {
            const Trigraph g = parse_graph(detail::read_file(greedy.graph_path));
            const GreedyResult res = greedy_sequence(g);
            if (!greedy.seq_path.empty()) {
                detail::write_file(greedy.seq_path, write_sequence(res.seq));
            }
            if (greedy.json) {
                nlohmann::ordered_json j;
                j["command"] = "greedy";
                j["width"] = res.width;
                j["steps"] = detail::steps_to_json(res.seq);
                if (!greedy.seq_path.empty()) {
                    j["seq_file"] = greedy.seq_path;
                }
                out << j.dump(2) << "\n";
            } else {
                out << "width=" << res.width << "\n";
                for (const ContractionStep& st : res.seq) {
                    out << st.survivor << " " << st.merged << "\n";
                }
            }
            return kExitOk;
        }
    } catch (const twinwidth::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const detail::IoFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command selected\n";
    return kExitUsage;
}

}  // namespace twinwidth::cli
