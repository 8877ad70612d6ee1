#include "excseq/json_io.hpp"

#include <numeric>
#include <sstream>

#include "excseq/errors.hpp"

namespace excseq {

Json quiver_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (auto [s, t] : q.arrows()) arrows.push_back(Json::array({s, t}));
    return Json{{"label", q.label()}, {"n", q.n()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
    std::vector<std::pair<int, int>> arrows;
    for (const Json& a : j.at("arrows")) arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    return Quiver(j.at("n").get<int>(), std::move(arrows), j.at("label").get<std::string>());
}

Json catalog_to_json(const Catalog& cat) {
    Json modules = Json::array();
    for (int id = 0; id < cat.size(); ++id) {
        Json support = Json::array();
        for (int v = 1; v <= cat.quiver().n(); ++v)
            if (cat.support(id) & (1u << (v - 1))) support.push_back(v);
        modules.push_back(Json{{"key", cat.key(id)},
                               {"dim", cat.dim(id)},
                               {"support", support},
                               {"projective", cat.projective(id)},
                               {"injective", cat.injective(id)},
                               {"simple", cat.simple(id)}});
    }
    return Json{{"schema_version", kSchemaVersion},
                {"quiver", quiver_to_json(cat.quiver())},
                {"modules", modules}};
}

Json sequence_to_json(const Catalog& cat, const ExcSequence& seq, bool with_classes) {
    Json terms = Json::array();
    for (int id : seq.terms) terms.push_back(cat.key(id));
    Json j{{"start", seq.start}, {"terms", terms}};
    if (with_classes) {
        Json classes = Json::array();
        for (const TermClass& tc : classify(cat, seq))
            classes.push_back(Json{{"relProj", tc.rel_proj}, {"relInj", tc.rel_inj}, {"root", tc.root()}});
        j["classes"] = classes;
    }
    return j;
}

ExcSequence sequence_from_json(const Catalog& cat, const Json& j) {
    std::vector<int> ids;
    for (const Json& k : j.at("terms")) ids.push_back(cat.id_of_key(k.get<std::string>()));
    ExcSequence seq = make_sequence(cat, std::move(ids));
    if (j.contains("start") && j.at("start").get<int>() != seq.start)
        throw ValidationError("sequence start does not match its length");
    return seq;
}

Json tuple_to_json(const Catalog& cat, const CompatibleTuple& tuple) {
    Json entries = Json::array();
    for (const LeveledObject& e : tuple.entries)
        entries.push_back(Json{{"key", cat.key(e.module)}, {"level", e.level}});
    return Json{{"m", tuple.m}, {"entries", entries}};
}

CompatibleTuple tuple_from_json(const Catalog& cat, const Json& j) {
    CompatibleTuple t;
    t.m = j.at("m").get<int>();
    for (const Json& e : j.at("entries"))
        t.entries.push_back({cat.id_of_key(e.at("key").get<std::string>()), e.at("level").get<int>()});
    return t;
}

Json m_exc_to_json(const Catalog& cat, const MExcSequence& mseq) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < mseq.seq.terms.size(); ++i)
        terms.push_back(Json{{"key", cat.key(mseq.seq.terms[i])}, {"level", mseq.levels[i]}});
    return Json{{"m", mseq.m}, {"start", mseq.seq.start}, {"terms", terms}};
}

MExcSequence m_exc_from_json(const Catalog& cat, const Json& j) {
    MExcSequence m;
    m.m = j.at("m").get<int>();
    std::vector<int> ids;
    for (const Json& e : j.at("terms")) {
        ids.push_back(cat.id_of_key(e.at("key").get<std::string>()));
        m.levels.push_back(e.at("level").get<int>());
    }
    m.seq = make_sequence(cat, std::move(ids));
    return m;
}

std::string ratio_string(long long count, long long total) {
    Rat reduced(count, total);
    std::ostringstream os;
    os << count << "/" << total;
    if (reduced.den() != total || reduced.num() != count) os << " = " << reduced.str();
    return os.str();
}

Json census_to_json(const CensusReport& r) {
    Json positions = Json::array();
    for (int k = 1; k <= r.n; ++k)
        positions.push_back(Json{{"k", k},
                                 {"relProj", r.rel_proj_count[static_cast<std::size_t>(k - 1)]},
                                 {"relInj", r.rel_inj_count[static_cast<std::size_t>(k - 1)]},
                                 {"rpi", r.rpi_count[static_cast<std::size_t>(k - 1)]}});
    Json joint = Json::array();
    for (const JointRpi& j : r.joint_rpi)
        joint.push_back(Json{{"positions", j.positions},
                             {"count", j.count},
                             {"lastKProjective", j.last_k_projective},
                             {"bijectionVerified", j.bijection_verified},
                             {"probability", ratio_string(j.count, r.total)}});
    return Json{{"schema_version", kSchemaVersion},
                {"quiver_label", r.quiver_label},
                {"n", r.n},
                {"h", r.h},
                {"total", r.total},
                {"positions", positions},
                {"lastKProjective", r.last_k_projective},
                {"lastKRelProj", r.last_k_rel_proj},
                {"jointRpi", joint}};
}

CensusReport census_from_json(const Json& j) {
    CensusReport r;
    r.quiver_label = j.at("quiver_label").get<std::string>();
    r.n = j.at("n").get<int>();
    r.h = j.at("h").get<int>();
    r.total = j.at("total").get<long long>();
    for (const Json& p : j.at("positions")) {
        r.rel_proj_count.push_back(p.at("relProj").get<long long>());
        r.rel_inj_count.push_back(p.at("relInj").get<long long>());
        r.rpi_count.push_back(p.at("rpi").get<long long>());
    }
    r.last_k_projective = j.at("lastKProjective").get<std::vector<long long>>();
    r.last_k_rel_proj = j.at("lastKRelProj").get<std::vector<long long>>();
    for (const Json& q : j.at("jointRpi")) {
        JointRpi jr;
        jr.positions = q.at("positions").get<std::vector<int>>();
        jr.count = q.at("count").get<long long>();
        jr.last_k_projective = q.at("lastKProjective").get<long long>();
        jr.bijection_verified = q.at("bijectionVerified").get<bool>();
        r.joint_rpi.push_back(std::move(jr));
    }
    return r;
}

std::string export_dot(const SupportHasse& h) {
    std::ostringstream os;
    os << "digraph hasse {\n";
    for (std::size_t i = 0; i < h.keys.size(); ++i) {
        os << "  \"" << h.keys[i] << "\"";
        if (h.maximal[i]) os << " [style=bold]";
        os << ";\n";
    }
    std::vector<std::pair<int, int>> edges = h.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges)
        os << "  \"" << h.keys[static_cast<std::size_t>(a)] << "\" -> \""
           << h.keys[static_cast<std::size_t>(b)] << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace excseq
