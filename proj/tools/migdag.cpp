#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "migdag/migdag.hpp"

using namespace migdag;

namespace {

struct Common {
    std::string input = "-";
    std::string format = "edgelist";
    int threads = 1;
    unsigned seed = 0;
};

void add_common(CLI::App* sub, Common& c, bool with_input = true) {
    if (with_input) sub->add_option("input", c.input, "input file, or - for stdin");
    sub->add_option("--format", c.format, "edgelist, dot, or json")
        ->check(CLI::IsMember({"edgelist", "dot", "json"}));
    sub->add_option("--threads", c.threads, "reserved; always runs single-threaded");
    sub->add_option("--seed", c.seed, "reserved for future randomized modes");
}

UndirectedGraph read_graph(const Common& c) {
    Format f = format_from_name(c.format);
    if (c.input == "-") return parse_graph(std::cin, f);
    std::ifstream in(c.input);
    if (!in) throw std::runtime_error("cannot open " + c.input);
    return parse_graph(in, f);
}

Dag read_dag(const Common& c) {
    Format f = format_from_name(c.format);
    if (c.input == "-") return parse_dag(std::cin, f);
    std::ifstream in(c.input);
    if (!in) throw std::runtime_error("cannot open " + c.input);
    return parse_dag(in, f);
}

std::string member_list(const UndirectedGraph& g, NodeSet s) {
    std::string out;
    s.for_each([&](int v) {
        if (!out.empty()) out += " ";
        out += g.label(v);
    });
    return out;
}

int run_recognize(const Common& c) {
    auto g = read_graph(c);
    auto r = is_smig(g);
    if (!r.smig) {
        std::cout << "no\n";
        std::cout << "witness: " << g.label(r.witness->first) << " -- " << g.label(r.witness->second)
                  << " lies in no simplex\n";
        return 1;
    }
    std::cout << "yes\n";
    for (std::size_t i = 0; i < r.decomposition->simplexes.size(); ++i)
        std::cout << "simplex: " << member_list(g, r.decomposition->simplexes[i])
                  << " (simplicial: " << member_list(g, r.decomposition->simplicial[i]) << ")\n";
    return 0;
}

int run_sink(const Common& c) {
    auto g = read_graph(c);
    emit_mixed(std::cout, sink_graph(g).mixed, format_from_name(c.format));
    return 0;
}

int run_unique(const Common& c) {
    auto g = read_graph(c);
    if (!is_smig(g).smig) {
        std::cout << "no: not a simple marginal independence graph\n";
        return 1;
    }
    if (!has_unique_faithful_dag(g)) {
        std::cout << "no: several faithful DAGs\n";
        return 1;
    }
    std::cout << "yes\n";
    return 0;
}

struct EnumerateOpts {
    std::string mode = "posets";
    std::uint64_t limit = 0;
    bool count_only = false;
};

int run_enumerate(const Common& c, const EnumerateOpts& o) {
    auto g = read_graph(c);
    Format f = format_from_name(c.format);
    std::uint64_t count = 0;

    auto step = [&](auto&& emit_one) -> bool {
        ++count;
        if (!o.count_only) emit_one();
        return o.limit == 0 || count < o.limit;
    };
    auto poset_cb = [&](const Poset& p) {
        return step([&] { emit_poset(std::cout, p, f); std::cout << "\n"; });
    };

    if (o.mode == "posets") {
        faithful_posets(g, poset_cb);
    } else if (o.mode == "dags") {
        faithful_dags(g, [&](const Dag& d) {
            return step([&] { emit_dag(std::cout, d, f); std::cout << "\n"; });
        });
    } else if (o.mode == "patterns") {
        faithful_dag_patterns(g, [&](const DagPattern& p) {
            return step([&] { emit_pattern(std::cout, p, f); std::cout << "\n"; });
        });
    } else if (o.mode == "minimal") {
        minimal_posets(g, [&](const MinimalPoset& mp) {
            return step([&] { emit_poset(std::cout, mp.poset, f); std::cout << "\n"; });
        });
    } else {
        sink_orientations(g, poset_cb);
    }
    if (o.count_only) std::cout << count << "\n";
    return 0;
}

int run_tree(const Common& c) {
    auto g = read_graph(c);
    emit_poset(std::cout, tree_poset(g), format_from_name(c.format));
    return 0;
}

int run_embed(const Common& c) {
    auto g = read_graph(c);
    emit_dag(std::cout, embed_as_induced_smig(g).dag, format_from_name(c.format));
    return 0;
}

int run_mig(const Common& c) {
    auto d = read_dag(c);
    emit_graph(std::cout, marginal_independence_graph(d), format_from_name(c.format));
    return 0;
}

struct LatentOpts {
    std::string mode = "exact";
    int budget = -1;
    bool count_only = false;
};

int run_latent(const Common& c, const LatentOpts& o) {
    auto g = read_graph(c);
    Format f = format_from_name(c.format);
    AugmentedDag a;
    if (o.mode == "oracle") {
        auto best = min_auxiliary_bruteforce(g, o.budget < 0 ? 8 : o.budget);
        if (!best) {
            std::cerr << "no faithful DAG within " << o.budget << " auxiliary nodes\n";
            return 1;
        }
        a = *best;
    } else if (o.budget >= 0 && !is_smig(g).smig) {
        auto cover = edge_clique_cover_within(g, o.budget);
        if (!cover) {
            std::cerr << "no edge clique cover within " << o.budget << " cliques\n";
            return 1;
        }
        a = dag_from_cover(g, *cover);
    } else {
        a = min_auxiliary_dag(g, o.mode == "greedy" ? CoverMode::Greedy : CoverMode::Exact);
    }
    if (o.count_only) {
        std::cout << a.auxiliary_count() << "\n";
        return 0;
    }
    emit_dag(std::cout, a.dag, f);
    return 0;
}

struct CensusOpts {
    bool table1 = false;
    bool table2 = false;
    int n = 0;
    bool allow_expensive = false;
};

int run_census(const CensusOpts& o) {
    if (o.table1) {
        auto r = census_connected(o.n, o.allow_expensive);
        std::cout << o.n << " " << r.graphs << " " << r.smigs << " " << r.unique_dag << "\n";
    } else {
        std::cout << o.n << " " << count_labeled_posets(o.n) << " "
                  << count_faithful_to_complete(o.n) << "\n";
    }
    return 0;
}

struct OracleOpts {
    std::string check = "enumeration";
    int n = 4;
};

std::vector<std::string> poset_keys(int n, const std::vector<Poset>& ps) {
    std::vector<std::string> keys;
    for (const auto& p : ps) {
        std::vector<NodeSet> rows(n);
        for (int v = 0; v < n; ++v) rows[v] = p.reduction().children(v);
        keys.push_back(detail::row_key(n, rows));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

int run_oracle(const OracleOpts& o) {
    if (o.n < 1 || o.n > 5) throw CapacityError("exhaustive cross-checks limited to 5 nodes");
    for (int k = 1; k <= o.n; ++k) {
        std::uint64_t classes = 0;
        for (std::uint64_t code : detail::graph_class_codes(k, true)) {
            ++classes;
            UndirectedGraph g(k, detail::decode_undirected(k, code));
            bool ok = true;
            std::string what;
            if (o.check == "recognition") {
                bool fast = is_smig(g).smig;
                bool slow = !all_faithful_dags_bruteforce(g).empty();
                ok = fast == slow;
                what = "recognition disagrees with the exhaustive DAG search";
            } else if (o.check == "enumeration") {
                if (!is_smig(g).smig) continue;
                ok = poset_keys(k, all_faithful_posets(g)) ==
                     poset_keys(k, all_faithful_posets_bruteforce(g));
                what = "streamed posets differ from the exhaustive set";
            } else {
                if (!is_smig(g).smig) continue;
                auto maximal = poset_keys(k, all_sink_orientations(g));
                std::vector<Poset> passing;
                for (const auto& p : all_faithful_posets_bruteforce(g))
                    if (maximality_check(g, p)) passing.push_back(p);
                ok = maximal == poset_keys(k, passing);
                what = "sink orientations differ from the maximality filter";
            }
            if (!ok) {
                std::cout << "mismatch on " << k << "-node graph, edges:";
                for (auto [u, v] : g.edges()) std::cout << " " << u << "-" << v;
                std::cout << "\n" << what << "\n";
                return 1;
            }
        }
        std::cout << "ok n=" << k << " classes=" << classes << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"faithful DAGs of simple marginal independence graphs"};
    app.require_subcommand(1);

    Common c_rec, c_sink, c_enum, c_tree, c_unique, c_embed, c_mig, c_latent;
    EnumerateOpts eo;
    LatentOpts lo;
    CensusOpts co;
    OracleOpts oo;
    int rc = 0;

    auto* rec = app.add_subcommand("recognize",
                                   "decide whether a graph is a simple marginal independence graph");
    add_common(rec, c_rec);
    rec->callback([&] { rc = run_recognize(c_rec); });

    auto* sink = app.add_subcommand("sink-graph", "largest-boundary orientation of a recognized graph");
    add_common(sink, c_sink);
    sink->callback([&] { rc = run_sink(c_sink); });

    auto* en = app.add_subcommand("enumerate", "stream faithful posets, DAGs, or DAG patterns");
    add_common(en, c_enum);
    en->add_option("--mode", eo.mode, "posets, dags, patterns, minimal, or maximal")
        ->check(CLI::IsMember({"posets", "dags", "patterns", "minimal", "maximal"}));
    en->add_option("--limit", eo.limit, "stop after this many objects");
    en->add_flag("--count-only", eo.count_only, "print only the number of objects");
    en->callback([&] { rc = run_enumerate(c_enum, eo); });

    auto* tr = app.add_subcommand("tree", "tree-shaped faithful poset of a trivially perfect graph");
    add_common(tr, c_tree);
    tr->callback([&] { rc = run_tree(c_tree); });

    auto* un = app.add_subcommand("unique", "decide whether the faithful DAG is unique");
    add_common(un, c_unique);
    un->callback([&] { rc = run_unique(c_unique); });

    auto* em = app.add_subcommand("embed",
                                  "embed any graph as an induced subgraph of a marginal independence graph");
    add_common(em, c_embed);
    em->callback([&] { rc = run_embed(c_embed); });

    auto* mg = app.add_subcommand("mig", "marginal independence graph of a poset");
    add_common(mg, c_mig);
    mg->callback([&] { rc = run_mig(c_mig); });

    auto* la = app.add_subcommand("latent", "faithful DAG with auxiliary nodes for any graph");
    add_common(la, c_latent);
    la->add_option("--mode", lo.mode, "exact, greedy, or oracle")
        ->check(CLI::IsMember({"exact", "greedy", "oracle"}));
    la->add_option("--budget", lo.budget, "maximum number of auxiliary nodes");
    la->add_flag("--count-only", lo.count_only, "print only the number of auxiliary nodes");
    la->callback([&] { rc = run_latent(c_latent, lo); });

    auto* ce = app.add_subcommand("census", "isomorphism-class counts on small node counts");
    auto* t1 = ce->add_flag("--table1", co.table1, "connected graphs / SMIGs / unique-DAG SMIGs");
    auto* t2 = ce->add_flag("--table2", co.table2, "labeled posets and posets faithful to the complete graph");
    ce->add_option("-n", co.n, "node count")->required();
    ce->add_flag("--allow-expensive", co.allow_expensive, "permit the 8-node census");
    t1->excludes(t2);
    ce->callback([&] {
        if (!co.table1 && !co.table2)
            throw CLI::ValidationError("census", "pick --table1 or --table2");
        rc = run_census(co);
    });

    auto* orc = app.add_subcommand("oracle", "exhaustive cross-checks on all small graphs");
    orc->add_option("--check", oo.check, "enumeration, recognition, or maximality")
        ->check(CLI::IsMember({"enumeration", "recognition", "maximality"}));
    orc->add_option("-n", oo.n, "check all connected graphs up to this many nodes");
    orc->callback([&] { rc = run_oracle(oo); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotSmigError& e) {
        std::cerr << "error: " << e.what() << " (witness " << e.witness.first << " -- "
                  << e.witness.second << ")\n";
        return 1;
    } catch (const NotTriviallyPerfectError& e) {
        const auto& w = e.witness;
        std::cerr << "error: " << e.what() << " (" << (w.cycle ? "cycle" : "path") << " " << w.nodes[0]
                  << " " << w.nodes[1] << " " << w.nodes[2] << " " << w.nodes[3] << ")\n";
        return 1;
    } catch (const NotConnectedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
