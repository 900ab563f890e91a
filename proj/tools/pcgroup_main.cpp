/*
   Copyright 2026 The pcgroup authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "pcgroup/bench.hpp"
#include "pcgroup/conjugacy.hpp"
#include "pcgroup/group_spec.hpp"
#include "pcgroup/kex.hpp"

namespace {

using namespace pcg;

// exit codes: 0 success, 1 domain failure, 2 usage or parse error
constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + out_path + "'");
    out << text;
}

SearchLimits make_limits(std::uint64_t orbit_cap, std::uint64_t visited_cap, std::int64_t timeout_ms,
                         std::int64_t step_limit) {
    SearchLimits limits;
    limits.orbit_cap = orbit_cap;
    limits.visited_cap = visited_cap;
    limits.collect.step_limit = step_limit;
    if (timeout_ms > 0)
        limits.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    return limits;
}

std::vector<NormalWord> parse_word_list(const GroupSpec& g, const std::string& text) {
    std::vector<NormalWord> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ';'))
        out.push_back(collect(g.pres, Word::parse(cur, g.num_gens())));
    return out;
}

int cmd_build(const std::string& group_ref, const std::string& out_path) {
    GroupSpec g = load_group(group_ref);
    write_output(serialize_group(g), out_path);
    return kOk;
}

int cmd_collect(const std::string& group_ref, const std::string& word_text, std::int64_t step_limit) {
    GroupSpec g = load_group(group_ref);
    Word w = Word::parse(word_text, g.num_gens());
    CollectOptions opt;
    opt.step_limit = step_limit;
    std::cout << collect(g.pres, w, opt).str() << "\n";
    return kOk;
}

int cmd_consistency(const std::string& group_ref, std::int64_t step_limit) {
    GroupSpec g = load_group(group_ref);
    CollectOptions opt;
    opt.step_limit = step_limit;
    ConsistencyReport report = check_consistency(g.pres, opt);
    if (report.consistent) {
        std::cout << "consistent\n";
        return kOk;
    }
    std::cout << "inconsistent (" << report.violations.size() << " violations)\n";
    for (const ConsistencyViolation& v : report.violations)
        std::cout << v.overlap << ": " << v.left << " vs " << v.right << "\n";
    return kDomainFailure;
}

int cmd_hirsch(const std::string& group_ref) {
    GroupSpec g = load_group(group_ref);
    std::cout << hirsch_length(g.pres) << "\n";
    return kOk;
}

int cmd_conjugacy(const std::string& group_ref, const std::string& r_text, const std::string& s_text,
                  const std::string& acting_text, const Solver& solver, const SearchLimits& limits) {
    GroupSpec g = load_group(group_ref);
    NormalWord r = collect(g.pres, Word::parse(r_text, g.num_gens()), limits.collect);
    NormalWord s = collect(g.pres, Word::parse(s_text, g.num_gens()), limits.collect);
    ActingSet acting =
        acting_text.empty() ? ActingSet::whole_group(g) : ActingSet{parse_word_list(g, acting_text)};

    std::optional<ConjugacyWitness> w =
        solver.kind == Solver::Kind::Finite
            ? conjugacy_search_finite(g, acting, r, s, limits)
            : conjugacy_search_bounded(g, acting, r, s, solver.bound, limits);
    if (!w) {
        std::cerr << (solver.kind == Solver::Kind::Finite
                          ? "not conjugate under the acting subgroup\n"
                          : "no conjugator found within the bound\n");
        return kDomainFailure;
    }
    std::cout << "conjugator " << w->conjugator.str() << "\n";
    std::cout << "expr " << w->conjugator_expr.str() << "\n";
    std::cout << "centralizer ";
    if (w->centralizer_gens.empty()) {
        std::cout << "-\n";
    } else {
        for (std::size_t i = 0; i < w->centralizer_gens.size(); ++i)
            std::cout << (i ? ";" : "") << w->centralizer_gens[i].str();
        std::cout << "\n";
    }
    return kOk;
}

int cmd_kex(Protocol protocol, const std::string& group_ref, std::uint64_t seed, bool with_keys,
            const std::string& out_path) {
    GroupPtr g = share(load_group(group_ref));
    if (protocol == Protocol::Aag) {
        AagInstance inst = aag_random_instance(g, seed);
        write_output(aag_transcript(inst, group_ref, with_keys).serialize(), out_path);
        std::cerr << "aag: keys agree, shared key " << inst.key.str() << "\n";
        return kOk;
    }
    // ncdh needs the factor split of a direct product
    if (group_ref.rfind("product:", 0) != 0)
        throw DomainError("kex ncdh needs a product:<a>,<b> group (commuting subgroups)");
    std::string inner = group_ref.substr(8);
    GroupSpec first = builtin_group(inner.substr(0, inner.find(',')));
    NcdhInstance inst = ncdh_random_instance(g, first.num_gens(), seed);
    write_output(ncdh_transcript(inst, group_ref, with_keys).serialize(), out_path);
    std::cerr << "ncdh: keys agree, shared key " << inst.key.str() << "\n";
    return kOk;
}

int attack_transcript(const KexTranscript& t, const Solver& solver, const SearchLimits& limits) {
    GroupPtr g = share(load_group(t.group_ref));
    std::optional<NormalWord> key;
    if (t.protocol == Protocol::Aag) {
        AagParams params(g, t.s_gens, t.t_gens);
        key = aag_attack(params, t.commit_a, t.commit_b, solver, limits);
    } else {
        NcdhParams params(g, *t.u, t.s_gens, t.t_gens);
        key = ncdh_attack(params, t.commit_a.at(0), t.commit_b.at(0), solver, limits);
    }
    if (!key) {
        std::cerr << "attack failed: solver found no conjugator\n";
        return kDomainFailure;
    }
    std::cout << "recovered " << key->str() << "\n";
    if (t.key_a && *t.key_a != *key) {
        std::cerr << "attack failed: recovered key differs from transcript key\n";
        return kDomainFailure;
    }
    return kOk;
}

int cmd_attack(const std::string& transcript_path, const std::string& kind, const std::string& group_ref,
               std::uint64_t seed, const Solver& solver, const SearchLimits& limits) {
    if (!transcript_path.empty()) {
        std::ifstream in(transcript_path);
        if (!in) throw ParseError(0, "cannot read transcript '" + transcript_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return attack_transcript(KexTranscript::parse(buf.str()), solver, limits);
    }
    GroupPtr g = share(load_group(group_ref));
    if (kind == "aag") {
        AagInstance inst = aag_random_instance(g, seed);
        std::optional<NormalWord> key = aag_attack(inst.params, inst.commit_a, inst.commit_b, solver, limits);
        if (!key) {
            std::cerr << "attack failed: solver found no conjugator\n";
            return kDomainFailure;
        }
        std::cout << "recovered " << key->str() << "\n";
        if (*key != inst.key) {
            std::cerr << "attack failed: recovered key differs from honest key " << inst.key.str() << "\n";
            return kDomainFailure;
        }
        std::cerr << "attack succeeded: recovered the honest shared key\n";
        return kOk;
    }
    if (group_ref.rfind("product:", 0) != 0)
        throw DomainError("attack ncdh needs a product:<a>,<b> group");
    std::string inner = group_ref.substr(8);
    GroupSpec first = builtin_group(inner.substr(0, inner.find(',')));
    NcdhInstance inst = ncdh_random_instance(g, first.num_gens(), seed);
    std::optional<NormalWord> key = ncdh_attack(inst.params, inst.commit_a, inst.commit_b, solver, limits);
    if (!key) {
        std::cerr << "attack failed: solver found no conjugator\n";
        return kDomainFailure;
    }
    std::cout << "recovered " << key->str() << "\n";
    if (*key != inst.key) {
        std::cerr << "attack failed: recovered key differs from honest key\n";
        return kDomainFailure;
    }
    std::cerr << "attack succeeded: recovered the honest shared key\n";
    return kOk;
}

int cmd_bench(const std::string& group_ref, const std::string& rs_text, int trials, const Solver& solver,
              std::int64_t timeout_ms, std::uint64_t seed, const std::string& format_text,
              const WordParams& wp, const ConjugatorParams& cp, bool warmup) {
    TableFormat format;
    if (format_text == "markdown")
        format = TableFormat::Markdown;
    else if (format_text == "csv")
        format = TableFormat::Csv;
    else
        throw DomainError("bad format '" + format_text + "' (markdown or csv)");

    std::vector<BenchResult> rows;
    auto bench_one = [&](const GroupSpec& g, std::optional<int> r) {
        BenchResult coll = bench_collection(g, trials, wp, seed, warmup);
        BenchResult conj = bench_conjugacy(g, trials, solver, cp, timeout_ms, seed);
        BenchResult row = combine_rows(coll, conj);
        row.r = r;
        rows.push_back(std::move(row));
    };

    if (!rs_text.empty()) {
        std::istringstream in(rs_text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            int r = std::stoi(tok);
            bench_one(cyclotomic_group(r), r);
        }
    } else if (!group_ref.empty()) {
        bench_one(load_group(group_ref), std::nullopt);
    } else {
        throw DomainError("bench needs --rs or --group");
    }
    std::cout << emit_table(rows, format);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for polycyclic-group arithmetic, conjugacy search and key exchange"};
    app.require_subcommand(1);

    std::string group_ref, out_path, word_text, r_text, s_text, acting_text, transcript_path;
    std::string solver_text = "finite", format_text = "markdown", rs_text, kind = "aag";
    std::uint64_t seed = 42, orbit_cap = 1u << 20, visited_cap = 1u << 22;
    std::int64_t timeout_ms = 60000, step_limit = 10'000'000;
    int trials = 100;
    bool with_keys = false, warmup = false;
    WordParams wp;
    ConjugatorParams cp;

    auto add_group = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--group", group_ref,
                                    "builtin (d4 | dihedral:<m> | heisenberg | cyclotomic:<r> | "
                                    "product:<a>,<b>) or presentation file");
        if (required) opt->required();
    };

    auto* build = app.add_subcommand("build", "construct a group and print its presentation file");
    add_group(build);
    build->add_option("--out", out_path, "output path (default stdout)");

    auto* collect_cmd = app.add_subcommand("collect", "collect a word to its normal form");
    add_group(collect_cmd);
    collect_cmd->add_option("--word", word_text, "word, e.g. \"g2 g1^-3\"")->required();
    collect_cmd->add_option("--step-limit", step_limit, "rewriting-step budget");

    auto* consistency = app.add_subcommand("consistency", "run the overlap consistency checks");
    add_group(consistency);
    consistency->add_option("--step-limit", step_limit, "rewriting-step budget");

    auto* hirsch = app.add_subcommand("hirsch", "print the Hirsch length");
    add_group(hirsch);

    auto* conj = app.add_subcommand("conjugacy", "search for a conjugating element");
    add_group(conj);
    conj->add_option("--r", r_text, "left element (word syntax)")->required();
    conj->add_option("--s", s_text, "right element (word syntax)")->required();
    conj->add_option("--acting", acting_text, "';'-separated acting generators (default: whole group)");
    conj->add_option("--solver", solver_text, "finite | bounded:<L>");
    conj->add_option("--timeout-ms", timeout_ms, "deadline per search (0 = none)");
    conj->add_option("--orbit-cap", orbit_cap, "orbit point cap");
    conj->add_option("--visited-cap", visited_cap, "visited-set cap");
    conj->add_option("--step-limit", step_limit, "rewriting-step budget");

    auto* kex = app.add_subcommand("kex", "run a key-exchange session and print the transcript");
    kex->require_subcommand(1);
    auto* kex_aag = kex->add_subcommand("aag", "commutator key agreement");
    auto* kex_ncdh = kex->add_subcommand("ncdh", "non-commutative Diffie-Hellman");
    for (CLI::App* cmd : {kex_aag, kex_ncdh}) {
        cmd->add_option("--group", group_ref, "group (defaults: aag dihedral:1024, ncdh product:d4,d4)");
        cmd->add_option("--seed", seed, "instance seed");
        cmd->add_option("--out", out_path, "transcript path (default stdout)");
        cmd->add_flag("--with-keys", with_keys, "include the derived keys in the transcript");
    }

    auto* attack = app.add_subcommand("attack", "recover the shared key from public data");
    attack->add_option("--transcript", transcript_path, "attack a stored transcript");
    attack->add_option("--kind", kind, "aag | ncdh (when generating an instance)");
    attack->add_option("--group", group_ref, "group for a generated instance");
    attack->add_option("--seed", seed, "instance seed");
    attack->add_option("--solver", solver_text, "finite | bounded:<L>");
    attack->add_option("--timeout-ms", timeout_ms, "deadline for the whole attack (0 = none)");
    attack->add_option("--orbit-cap", orbit_cap, "orbit point cap");
    attack->add_option("--visited-cap", visited_cap, "visited-set cap");

    std::string suite = "cyclotomic";
    auto* bench = app.add_subcommand("bench", "word-problem vs conjugacy timing table");
    bench->add_option("--suite", suite, "row family (cyclotomic)");
    bench->add_option("--rs", rs_text, "comma list of cyclotomic orders, e.g. 3,4,7");
    bench->add_option("--group", group_ref, "bench a single group instead of a suite");
    bench->add_option("--trials", trials, "trials per row");
    bench->add_option("--solver", solver_text, "finite | bounded:<L> (default bounded:4)");
    bench->add_option("--timeout-ms", timeout_ms, "per-trial conjugacy deadline");
    bench->add_option("--seed", seed, "word-sequence seed");
    bench->add_option("--format", format_text, "markdown | csv");
    bench->add_option("--syllables", wp.syllables, "collect-word syllables");
    bench->add_option("--exp-bound", wp.exponent_bound, "collect-word exponent bound");
    bench->add_option("--conj-syllables", cp.syllables, "conjugator syllables");
    bench->add_option("--conj-exp", cp.exponent_bound, "conjugator exponent bound");
    bench->add_flag("--warmup", warmup, "discard one warmup collect per row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (build->parsed()) return cmd_build(group_ref, out_path);
        if (collect_cmd->parsed()) return cmd_collect(group_ref, word_text, step_limit);
        if (consistency->parsed()) return cmd_consistency(group_ref, step_limit);
        if (hirsch->parsed()) return cmd_hirsch(group_ref);
        if (conj->parsed())
            return cmd_conjugacy(group_ref, r_text, s_text, acting_text, Solver::parse(solver_text),
                                 make_limits(orbit_cap, visited_cap, timeout_ms, step_limit));
        if (kex->parsed()) {
            Protocol proto = kex_aag->parsed() ? Protocol::Aag : Protocol::Ncdh;
            if (group_ref.empty()) group_ref = proto == Protocol::Aag ? "dihedral:1024" : "product:d4,d4";
            return cmd_kex(proto, group_ref, seed, with_keys, out_path);
        }
        if (attack->parsed()) {
            if (transcript_path.empty() && group_ref.empty())
                group_ref = kind == "aag" ? "dihedral:1024" : "product:d4,d4";
            if (transcript_path.empty() && kind != "aag" && kind != "ncdh")
                throw DomainError("attack --kind must be aag or ncdh");
            return cmd_attack(transcript_path, kind, group_ref, seed, Solver::parse(solver_text),
                              make_limits(orbit_cap, visited_cap, timeout_ms, step_limit));
        }
        if (bench->parsed()) {
            if (suite != "cyclotomic") throw DomainError("unknown suite '" + suite + "'");
            Solver solver = bench->count("--solver") ? Solver::parse(solver_text) : Solver::bounded(4);
            return cmd_bench(group_ref, rs_text, trials, solver, timeout_ms, seed, format_text, wp, cp,
                             warmup);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        // step limits, caps, timeouts: legitimate domain failures
        std::cerr << "error: " << e.what() << "\n";
        return kDomainFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainFailure;
    }
    return kUsage;
}
