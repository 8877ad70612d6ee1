#include "excseq/cli.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "excseq/errors.hpp"
#include "excseq/json_io.hpp"

namespace excseq {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

ExcSequence parse_seq(const Catalog& cat, const std::string& spec) {
    std::vector<int> ids;
    for (const std::string& key : split_commas(spec)) ids.push_back(cat.id_of_key(key));
    return make_sequence(cat, std::move(ids));
}

std::vector<int> parse_levels(const std::string& spec) {
    std::vector<int> out;
    for (const std::string& tok : split_commas(spec)) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(c); }))
            throw ValidationError("malformed level '" + tok + "'");
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::string seq_text(const Catalog& cat, const ExcSequence& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.terms.size(); ++i) {
        if (i) s += ',';
        s += cat.key(seq.terms[i]);
    }
    return s;
}

std::string leveled_text(const Catalog& cat, const std::vector<LeveledObject>& objs) {
    std::string s;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        if (i) s += ',';
        s += cat.key(objs[i].module) + "[" + std::to_string(objs[i].level) + "]";
    }
    return s;
}

struct Options {
    std::string quiver;
    std::string seq;
    std::string levels;
    std::string dir;
    int k = 0;
    int m = 1;
    bool json = false;
    bool count = false;
    bool dot = false;
    bool rpi_pairs = false;
};

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out) {
    Quiver q = parse_quiver(opt.quiver);

    if (cmd == "roots") {
        std::vector<IntVec> roots = positive_roots(q);
        if (opt.json) {
            Json arr = Json::array();
            for (const IntVec& r : roots) arr.push_back(r);
            out << Json{{"schema_version", kSchemaVersion}, {"quiver", quiver_to_json(q)}, {"roots", arr}}.dump()
                << "\n";
        } else {
            for (const IntVec& r : roots) {
                std::string s;
                for (std::size_t i = 0; i < r.size(); ++i) {
                    if (i) s += '.';
                    s += std::to_string(r[i]);
                }
                out << s << "\n";
            }
        }
        return 0;
    }

    Catalog cat = Catalog::build(q);

    if (cmd == "catalog") {
        if (opt.json) {
            out << catalog_to_json(cat).dump() << "\n";
            return 0;
        }
        for (int id = 0; id < cat.size(); ++id) {
            std::string support;
            for (int v = 1; v <= q.n(); ++v)
                if (cat.support(id) & (1u << (v - 1))) {
                    if (!support.empty()) support += ',';
                    support += std::to_string(v);
                }
            std::string flags;
            if (cat.projective(id)) flags += 'P';
            if (cat.injective(id)) flags += 'I';
            if (cat.simple(id)) flags += 'S';
            if (flags.empty()) flags = "-";
            out << cat.key(id) << " support=" << support << " flags=" << flags << "\n";
        }
        return 0;
    }
    if (cmd == "enumerate") {
        std::vector<ExcSequence> all = enumerate_ces(cat);
        if (opt.count) {
            out << all.size() << "\n";
        } else if (opt.json) {
            for (const ExcSequence& s : all) out << sequence_to_json(cat, s).dump() << "\n";
        } else {
            for (const ExcSequence& s : all) out << seq_text(cat, s) << "\n";
        }
        return 0;
    }
    if (cmd == "classify") {
        ExcSequence seq = parse_seq(cat, opt.seq);
        require_valid(cat, seq);
        if (opt.json) {
            out << sequence_to_json(cat, seq, true).dump() << "\n";
            return 0;
        }
        std::vector<TermClass> cls = classify(cat, seq);
        for (std::size_t i = 0; i < cls.size(); ++i)
            out << "E" << seq.start + static_cast<int>(i) << " " << cat.key(seq.terms[i])
                << " relProj=" << cls[i].rel_proj << " relInj=" << cls[i].rel_inj
                << " root=" << cls[i].root() << "\n";
        return 0;
    }
    if (cmd == "mutate") {
        ExcSequence seq = parse_seq(cat, opt.seq);
        BraidDirection dir;
        if (opt.dir == "right")
            dir = BraidDirection::right;
        else if (opt.dir == "left")
            dir = BraidDirection::left;
        else
            throw ValidationError("--dir must be right or left");
        ExcSequence res = braid_sigma(cat, seq, opt.k, dir);
        if (opt.json)
            out << sequence_to_json(cat, res).dump() << "\n";
        else
            out << seq_text(cat, res) << "\n";
        return 0;
    }
    if (cmd == "garside") {
        ExcSequence seq = parse_seq(cat, opt.seq);
        require_valid(cat, seq);
        ExcSequence res = garside(cat, seq);
        if (opt.json)
            out << sequence_to_json(cat, res).dump() << "\n";
        else
            out << seq_text(cat, res) << "\n";
        return 0;
    }
    if (cmd == "theta") {
        std::vector<int> ids;
        for (const std::string& key : split_commas(opt.seq)) ids.push_back(cat.id_of_key(key));
        std::vector<int> levels = parse_levels(opt.levels);
        if (levels.size() != ids.size()) throw ValidationError("--levels length must match --seq");
        if (opt.dir == "to-cluster") {
            MExcSequence ms{opt.m, make_sequence(cat, ids), levels};
            CompatibleTuple t = theta_inverse(cat, ms);
            if (opt.json)
                out << tuple_to_json(cat, t).dump() << "\n";
            else
                out << leveled_text(cat, t.entries) << "\n";
        } else if (opt.dir == "to-seq") {
            CompatibleTuple t;
            t.m = opt.m;
            for (std::size_t i = 0; i < ids.size(); ++i) t.entries.push_back({ids[i], levels[i]});
            MExcSequence ms = theta(cat, t);
            if (opt.json) {
                out << m_exc_to_json(cat, ms).dump() << "\n";
            } else {
                std::vector<LeveledObject> objs;
                for (std::size_t i = 0; i < ms.seq.terms.size(); ++i)
                    objs.push_back({ms.seq.terms[i], ms.levels[i]});
                out << leveled_text(cat, objs) << "\n";
            }
        } else {
            throw ValidationError("--dir must be to-cluster or to-seq");
        }
        return 0;
    }
    if (cmd == "clusters") {
        ClusterCensus cc = cluster_census(cat, opt.m);
        if (opt.json) {
            Json j{{"schema_version", kSchemaVersion},
                   {"quiver", quiver_to_json(q)},
                   {"m", cc.m},
                   {"clusters", cc.clusters},
                   {"positive", cc.positive_clusters},
                   {"orderedComplete", cc.ordered_complete_tuples},
                   {"tuplesByLength", cc.tuples_by_length},
                   {"mExcByLength", cc.m_exc_by_length}};
            out << j.dump() << "\n";
            return 0;
        }
        out << "clusters=" << cc.clusters << "\n";
        out << "positive=" << cc.positive_clusters << "\n";
        out << "ordered_complete=" << cc.ordered_complete_tuples << "\n";
        for (std::size_t t = 0; t < cc.tuples_by_length.size(); ++t)
            out << "t=" << t + 1 << " tuples=" << cc.tuples_by_length[t]
                << " sequences=" << cc.m_exc_by_length[t] << "\n";
        return 0;
    }
    if (cmd == "census") {
        CensusReport r = census(cat);
        if (opt.json) {
            out << census_to_json(r).dump() << "\n";
            return 0;
        }
        if (opt.rpi_pairs) {
            for (const JointRpi& j : r.joint_rpi) {
                if (j.positions.size() != 2) continue;
                out << "rpi{" << j.positions[0] << "," << j.positions[1]
                    << "} = " << ratio_string(j.count, r.total)
                    << (j.bijection_verified ? "" : " [bijection FAILED]") << "\n";
            }
            return 0;
        }
        out << "quiver " << r.quiver_label << "\n";
        out << "total " << r.total << "\n";
        out << "h " << r.h << "\n";
        for (int k = 1; k <= r.n; ++k)
            out << "position " << k << ": relProj=" << r.rel_proj_count[static_cast<std::size_t>(k - 1)]
                << " relInj=" << r.rel_inj_count[static_cast<std::size_t>(k - 1)]
                << " rpi=" << r.rpi_count[static_cast<std::size_t>(k - 1)] << " ("
                << ratio_string(r.rpi_count[static_cast<std::size_t>(k - 1)], r.total) << ")\n";
        out << "last-k projective:";
        for (long long c : r.last_k_projective) out << " " << c;
        out << "\nlast-k relProj:";
        for (long long c : r.last_k_rel_proj) out << " " << c;
        out << "\n";
        for (const JointRpi& j : r.joint_rpi) {
            out << "rpi{";
            for (std::size_t i = 0; i < j.positions.size(); ++i) {
                if (i) out << ",";
                out << j.positions[i];
            }
            out << "} = " << ratio_string(j.count, r.total)
                << (j.bijection_verified ? "" : " [bijection FAILED]") << "\n";
        }
        return 0;
    }
    if (cmd == "hasse") {
        ExcSequence seq = parse_seq(cat, opt.seq);
        require_valid(cat, seq);
        SupportHasse h = support_hasse(cat, seq);
        if (opt.json) {
            Json nodes = Json::array();
            for (std::size_t i = 0; i < h.keys.size(); ++i)
                nodes.push_back(Json{{"key", h.keys[i]}, {"maximal", static_cast<bool>(h.maximal[i])}});
            Json edges = Json::array();
            for (auto [a, b] : h.edges) edges.push_back(Json::array({h.keys[static_cast<std::size_t>(a)],
                                                                     h.keys[static_cast<std::size_t>(b)]}));
            out << Json{{"schema_version", kSchemaVersion}, {"nodes", nodes}, {"edges", edges}}.dump() << "\n";
        } else {
            out << export_dot(h);
        }
        return 0;
    }
    throw ValidationError("unknown subcommand '" + cmd + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for exceptional sequences over Dynkin quivers"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::pair<std::string, std::string>> specs = {
        {"roots", "positive roots of the quiver"},
        {"catalog", "indecomposable module table"},
        {"enumerate", "complete exceptional sequences"},
        {"classify", "relative projectivity/injectivity per term"},
        {"mutate", "braid move on an adjacent pair"},
        {"garside", "Garside action on a complete sequence"},
        {"theta", "cluster <-> m-exceptional sequence bijection"},
        {"clusters", "m-cluster counts"},
        {"census", "exhaustive statistics"},
        {"hasse", "support Hasse diagram"},
    };
    for (const auto& [name, desc] : specs) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--quiver", opt.quiver, "quiver description")->required();
        if (name == "classify" || name == "mutate" || name == "garside" || name == "theta" || name == "hasse")
            sub->add_option("--seq", opt.seq, "comma-separated module keys")->required();
        if (name == "mutate") {
            sub->add_option("--k", opt.k, "index of the mutated pair")->required();
            sub->add_option("--dir", opt.dir, "right or left")->required();
        }
        if (name == "theta") {
            sub->add_option("--m", opt.m, "shift bound m")->required();
            sub->add_option("--levels", opt.levels, "comma-separated levels")->required();
            sub->add_option("--dir", opt.dir, "to-cluster or to-seq")->required();
        }
        if (name == "clusters") sub->add_option("--m", opt.m, "shift bound m")->required();
        if (name == "enumerate") sub->add_flag("--count", opt.count, "print only the count");
        if (name == "census") sub->add_flag("--rpi-pairs", opt.rpi_pairs, "print pair-rPI ratios only");
        if (name == "hasse") sub->add_flag("--dot", opt.dot, "emit DOT (default)");
        sub->add_flag("--json", opt.json, "JSON output");
    }

    std::vector<char*> argv;
    std::string prog = "excseq";
    argv.push_back(prog.data());
    std::vector<std::string> owned = args;
    for (std::string& a : owned) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CatalogError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CycleError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IntegrityError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace excseq
