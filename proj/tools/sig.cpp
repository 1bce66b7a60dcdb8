// sig: build, query and check succinct interval / circular-arc graphs.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "sig.hpp"
#include "sig/oracle.hpp"
#include "sig/random.hpp"

namespace {

using json = nlohmann::ordered_json;
using sig::Vertex;

enum Exit : int { ok = 0, internal = 1, input = 2, query = 3, mismatch = 4 };

struct CliError : std::runtime_error {
    CliError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
    int code;
};

using AnyGraph = std::variant<sig::SuccinctIntervalGraph, sig::ProperIntervalGraph, sig::KProperGraph, sig::CircularArcGraph>;

using Clock = std::chrono::steady_clock;
double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

const std::vector<std::string> kTypes = {"interval", "proper", "kproper", "kimproper", "circular"};

std::string kind_of(const AnyGraph& g) {
    struct {
        std::string operator()(const sig::SuccinctIntervalGraph&) const { return "interval"; }
        std::string operator()(const sig::ProperIntervalGraph&) const { return "proper"; }
        std::string operator()(const sig::KProperGraph& k) const {
            return k.mode() == sig::DepthMode::contained_by ? "kproper" : "kimproper";
        }
        std::string operator()(const sig::CircularArcGraph&) const { return "circular"; }
    } name;
    return std::visit(name, g);
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("SIG_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw CliError(input, std::string("SIG_SEED is not a number: ") + s);
        }
    }
    return 1;
}

// ---- building -------------------------------------------------------------

struct BuildOptions {
    std::size_t block = sig::RangeMaxIndex::default_block;
    std::optional<std::size_t> anchor;  // 1-based input index
    bool degree_table = false;
};

BuildOptions with_block(std::size_t block) {
    BuildOptions o;
    o.block = block;
    return o;
}

AnyGraph build_intervals(const std::string& type, const sig::IntervalRealization& real, const BuildOptions& opt) {
    if (type == "interval") return sig::SuccinctIntervalGraph(real, opt.block);
    if (type == "proper") return sig::ProperIntervalGraph(real);
    if (type == "kproper") return sig::KProperGraph(real, sig::DepthMode::contained_by, opt.block);
    if (type == "kimproper") return sig::KProperGraph(real, sig::DepthMode::contains, opt.block);
    throw CliError(input, "type '" + type + "' needs interval input");
}

AnyGraph build_arcs(const sig::ArcRealization& arcs, const BuildOptions& opt) {
    return sig::CircularArcGraph(arcs, {.block = opt.block, .degree_table = opt.degree_table});
}

sig::text::Input read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError(input, "cannot open " + path);
    return sig::text::read(in);
}

AnyGraph build_from(const std::string& type, const sig::text::Input& in, const BuildOptions& opt) {
    if (type == "circular") {
        const auto* arcs = std::get_if<sig::text::ArcInput>(&in);
        if (!arcs) throw CliError(input, "type 'circular' needs a 'circular <n>' input");
        std::optional<std::size_t> anchor;
        if (opt.anchor) {
            if (*opt.anchor == 0 || *opt.anchor > arcs->arcs.size())
                throw CliError(input, "anchor " + std::to_string(*opt.anchor) + " outside 1.." + std::to_string(arcs->arcs.size()));
            anchor = *opt.anchor - 1;
        }
        return build_arcs(sig::normalize_arcs(arcs->arcs, anchor), opt);
    }
    const auto* iv = std::get_if<sig::text::IntervalInput>(&in);
    if (!iv) throw CliError(input, "type '" + type + "' needs an 'interval <n>' input");
    return build_intervals(type, sig::normalize(iv->intervals), opt);
}

void save(const AnyGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError(input, "cannot write " + path);
    sig::io::Writer w(out);
    std::visit([&](const auto& x) { x.save(w); }, g);
    if (!out) throw CliError(input, "write to " + path + " failed");
}

AnyGraph load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(input, "cannot open " + path);
    sig::io::Reader r(in);
    const auto tag = r.peek_tag();
    if (tag == sig::SuccinctIntervalGraph::tag) return sig::SuccinctIntervalGraph::load(r);
    if (tag == sig::ProperIntervalGraph::tag) return sig::ProperIntervalGraph::load(r);
    if (tag == sig::KProperGraph::tag) return sig::KProperGraph::load(r);
    if (tag == sig::CircularArcGraph::tag) return sig::CircularArcGraph::load(r);
    throw sig::format_error("unknown structure tag '" + tag + "'");
}

// ---- reports --------------------------------------------------------------

json space_json(const AnyGraph& g) {
    const auto rep = std::visit([](const auto& x) { return x.space(); }, g);
    const std::size_t n = std::visit([](const auto& x) { return x.size(); }, g);
    json j;
    j["type"] = kind_of(g);
    j["n"] = n;
    if (const auto* k = std::get_if<sig::KProperGraph>(&g)) j["k"] = k->k();
    if (const auto* c = std::get_if<sig::CircularArcGraph>(&g)) {
        j["q"] = c->normal_count();
        j["degree_table"] = c->has_degree_table();
    }
    json comp = json::object();
    for (const auto& [name, bits] : rep.components) comp[name] = bits;
    j["components"] = comp;
    j["total_bits"] = rep.total();
    j["bits_per_vertex"] = static_cast<double>(rep.total()) / static_cast<double>(n);
    return j;
}

void print_report(const json& j) {
    for (const auto& [key, val] : j.items()) {
        if (val.is_object()) {
            std::cout << key << '\n';
            for (const auto& [k2, v2] : val.items()) std::cout << "  " << k2 << ' ' << v2.dump() << '\n';
        } else {
            std::cout << key << ' ' << (val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
        }
    }
}

void emit(const json& j, bool as_json) {
    if (as_json) std::cout << j.dump() << '\n';
    else print_report(j);
}

std::string join(const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
    return s;
}

// ---- query ----------------------------------------------------------------

Vertex parse_vertex(const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty() || s[0] == '-') throw CliError(query, "not a vertex: '" + s + "'");
    return static_cast<Vertex>(v);
}

template <class G>
json answer(const G& g, const std::string& op, const std::vector<Vertex>& a) {
    auto want = [&](std::size_t k) {
        if (a.size() != k) throw CliError(query, op + " takes " + std::to_string(k) + " vertex argument(s)");
    };
    if (op == "degree") {
        want(1);
        return g.degree(a[0]);
    }
    if (op == "adjacent") {
        want(2);
        return g.adjacent(a[0], a[1]);
    }
    if (op == "neighborhood") {
        want(1);
        return g.neighborhood(a[0]);
    }
    if (op == "spath") {
        want(2);
        const auto p = g.spath(a[0], a[1]);
        return p ? json(*p) : json(nullptr);
    }
    if (op == "succ") {
        want(1);
        const auto s = g.succ(a[0]);
        return s ? json(*s) : json(nullptr);
    }
    if (op == "interval") {
        want(1);
        if constexpr (std::is_same_v<G, sig::CircularArcGraph>) {
            const auto e = g.arc(a[0]);
            return json::array({e.l, e.r});
        } else {
            const auto e = g.interval(a[0]);
            return json::array({e.l, e.r});
        }
    }
    throw CliError(query, "unknown query '" + op + "'");
}

std::string answer_text(const json& a) {
    if (a.is_null()) return "none";
    if (a.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + a[i].dump();
        return s;
    }
    return a.dump();
}

int cmd_query(const std::string& file, const std::string& op, const std::vector<std::string>& args, bool as_json) {
    const auto g = load(file);
    std::vector<Vertex> vs;
    for (const auto& s : args) vs.push_back(parse_vertex(s));
    json a;
    try {
        a = std::visit([&](const auto& x) { return answer(x, op, vs); }, g);
    } catch (const sig::range_error& e) {
        throw CliError(query, e.what());
    }
    if (as_json) std::cout << json{{"query", op}, {"args", vs}, {"answer", a}}.dump() << '\n';
    else std::cout << answer_text(a) << '\n';
    return ok;
}

// ---- algo -----------------------------------------------------------------

template <class G>
json run_algo(const G& g, const std::string& name) {
    if (name == "mis") return sig::mis(g);
    if (name == "mvc") return sig::mvc(g);
    if (name == "dfs") return sig::dfs_order(g);
    if (name == "bfs") return sig::bfs_order(g);
    if (name == "peo") return sig::peo(g);
    if (name == "clique") {
        const auto w = sig::max_clique(g);
        return json{{"size", w.size()}, {"cut", w.cut}, {"members", w.members}};
    }
    if (name == "coloring") {
        const auto c = sig::greedy_coloring(g);
        std::vector<std::size_t> cs;
        for (std::size_t i = 0; i < c.colors.size(); ++i) cs.push_back(c.colors[i]);
        return json{{"chromatic", c.chromatic}, {"colors", cs}};
    }
    throw CliError(query, "unknown algorithm '" + name + "'");
}

int cmd_algo(const std::string& file, const std::string& name, bool as_json) {
    const auto g = load(file);
    json r;
    if (const auto* s = std::get_if<sig::SuccinctIntervalGraph>(&g)) r = run_algo(*s, name);
    else if (const auto* p = std::get_if<sig::ProperIntervalGraph>(&g)) r = run_algo(*p, name);
    else throw CliError(input, "algorithms need an interval or proper structure, got " + kind_of(g));
    if (as_json) {
        std::cout << json{{"algorithm", name}, {"result", r}}.dump() << '\n';
    } else if (name == "clique") {
        std::cout << r["size"].dump() << '\n' << answer_text(r["members"]) << '\n';
    } else if (name == "coloring") {
        std::cout << r["chromatic"].dump() << '\n' << answer_text(r["colors"]) << '\n';
    } else {
        std::cout << answer_text(r) << '\n';
    }
    return ok;
}

// ---- verify ---------------------------------------------------------------

// Returns a description of the first disagreement with the oracle.
template <class G>
std::optional<std::string> check_queries(const G& g, const sig::oracle::Graph& o) {
    const std::size_t n = g.size();
    for (Vertex u = 1; u <= n; ++u) {
        const auto nb = g.neighborhood(u);
        if (nb != o.neighborhood(u)) return "neighborhood(" + std::to_string(u) + ") = {" + join(nb) + "}, oracle {" + join(o.neighborhood(u)) + "}";
        if (g.degree(u) != o.degree(u))
            return "degree(" + std::to_string(u) + ") = " + std::to_string(g.degree(u)) + ", oracle " + std::to_string(o.degree(u));
        const auto dist = o.distances(u);
        for (Vertex v = 1; v <= n; ++v) {
            const std::string pair = std::to_string(u) + "," + std::to_string(v);
            if (g.adjacent(u, v) != o.adjacent(u, v)) return "adjacent(" + pair + ") disagrees with oracle";
            const auto p = g.spath(u, v);
            const bool reachable = dist[v] != sig::oracle::unreachable;
            if (p.has_value() != reachable) return "spath(" + pair + ") " + (p ? "found a path" : "returned none") + " but oracle says " + (reachable ? "connected" : "disconnected");
            if (!p) continue;
            if (p->front() != u || p->back() != v) return "spath(" + pair + ") has wrong endpoints";
            for (std::size_t i = 1; i < p->size(); ++i)
                if (!o.adjacent((*p)[i - 1], (*p)[i])) return "spath(" + pair + ") = " + join(*p) + " uses a non-edge";
            if (p->size() - 1 != dist[v])
                return "spath(" + pair + ") length " + std::to_string(p->size() - 1) + ", oracle distance " + std::to_string(dist[v]);
        }
    }
    return std::nullopt;
}

template <class G>
std::optional<std::string> check_algorithms(const G& g, const sig::IntervalRealization& real, const sig::oracle::Graph& o) {
    namespace orc = sig::oracle;
    if (!orc::is_dfs_order(o, sig::dfs_order(g))) return "dfs order invalid";
    if (!orc::is_bfs_order(o, sig::bfs_order(g))) return "bfs order invalid";
    if (!orc::is_peo(o, sig::peo(g))) return "peo invalid";
    const auto m = sig::mis(g);
    if (!orc::is_independent(o, m)) return "mis {" + join(m) + "} is not independent";
    if (real.size() <= orc::dp_limit && m.size() != orc::mis_size(real))
        return "mis size " + std::to_string(m.size()) + ", oracle " + std::to_string(orc::mis_size(real));
    const auto w = sig::max_clique(g);
    if (!orc::is_clique(o, w.members)) return "clique {" + join(w.members) + "} is not a clique";
    if (w.size() != orc::max_overlap(real)) return "clique size " + std::to_string(w.size()) + ", oracle " + std::to_string(orc::max_overlap(real));
    const auto c = sig::greedy_coloring(g);
    std::vector<std::size_t> cs;
    for (std::size_t i = 0; i < c.colors.size(); ++i) cs.push_back(c.colors[i]);
    if (!orc::is_proper_coloring(o, cs)) return "coloring is not proper";
    if (c.chromatic != w.size()) return "coloring uses " + std::to_string(c.chromatic) + " colors, clique number " + std::to_string(w.size());
    return std::nullopt;
}

std::optional<std::string> check_intervals(const std::string& type, const sig::IntervalRealization& real, std::size_t block) {
    const auto o = sig::oracle::Graph::from_intervals(real);
    const auto g = build_intervals(type, real, with_block(block));
    if (const auto* s = std::get_if<sig::SuccinctIntervalGraph>(&g)) {
        if (s->realization() != real) return "decoded realization differs from input";
        if (auto f = check_queries(*s, o)) return f;
        return check_algorithms(*s, real, o);
    }
    if (const auto* p = std::get_if<sig::ProperIntervalGraph>(&g)) {
        if (auto f = check_queries(*p, o)) return f;
        return check_algorithms(*p, real, o);
    }
    return check_queries(std::get<sig::KProperGraph>(g), o);
}

std::optional<std::string> check_arcs(const sig::ArcRealization& arcs, std::size_t block) {
    const sig::CircularArcGraph g(arcs, {.block = block});
    if (g.realization() != arcs) return "decoded arcs differ from input";
    return check_queries(g, sig::oracle::Graph::from_arcs(arcs));
}

// Greedily drops vertices while the failure persists.
template <class Real, class Check>
Real shrink(Real real, Check&& fails) {
    auto drop = [](const Real& r, Vertex skip) {
        std::vector<sig::Endpoints> e;
        for (Vertex v = 1; v <= r.size(); ++v)
            if (v != skip) e.push_back(r[v]);
        // re-pack positions to 1..2m, keeping the cyclic / linear order
        std::vector<std::uint64_t> pos;
        for (const auto& x : e) pos.push_back(x.l), pos.push_back(x.r);
        std::sort(pos.begin(), pos.end());
        auto at = [&](std::uint64_t p) { return std::uint64_t(std::lower_bound(pos.begin(), pos.end(), p) - pos.begin()) + 1; };
        for (auto& x : e) x = {at(x.l), at(x.r)};
        if constexpr (std::is_same_v<Real, sig::ArcRealization>) {
            // rotate so the smallest start is position 1
            std::uint64_t first = e[0].l;
            for (const auto& x : e) first = std::min(first, x.l);
            const std::uint64_t m = 2 * e.size();
            for (auto& x : e) x = {(x.l + m - first) % m + 1, (x.r + m - first) % m + 1};
        }
        return Real(std::move(e));
    };
    bool progress = true;
    while (progress && real.size() > 1) {
        progress = false;
        for (Vertex v = 1; v <= real.size(); ++v) {
            auto smaller = drop(real, v);
            if (fails(smaller)) {
                real = std::move(smaller);
                progress = true;
                break;
            }
        }
    }
    return real;
}

struct VerifyArgs {
    std::string type = "interval";
    std::string input;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::size_t block = sig::RangeMaxIndex::default_block;
};

constexpr std::size_t kVerifyLimit = 2000;

int cmd_verify(const VerifyArgs& a, bool as_json) {
    std::size_t checked = 0;
    auto report_failure = [&](const std::string& what, const std::string& instance, std::size_t trial) {
        if (as_json) {
            std::cout << json{{"result", "FAIL"}, {"trial", trial}, {"failure", what}, {"counterexample", instance}}.dump() << '\n';
        } else {
            std::cout << "FAIL trial " << trial << ": " << what << "\ncounterexample:\n" << instance;
        }
        return mismatch;
    };
    auto run_intervals = [&](const sig::IntervalRealization& real, std::size_t trial) -> std::optional<int> {
        if (real.size() > kVerifyLimit) throw CliError(input, "verify limited to n <= " + std::to_string(kVerifyLimit));
        if (auto f = check_intervals(a.type, real, a.block)) {
            const auto small = shrink(real, [&](const sig::IntervalRealization& r) {
                try {
                    return check_intervals(a.type, r, a.block).has_value();
                } catch (const sig::realization_error&) {
                    return false;
                }
            });
            std::ostringstream out;
            sig::text::write(out, small);
            return report_failure(*check_intervals(a.type, small, a.block), out.str(), trial);
        }
        ++checked;
        return std::nullopt;
    };
    auto run_arcs = [&](const sig::ArcRealization& arcs, std::size_t trial) -> std::optional<int> {
        if (arcs.size() > kVerifyLimit) throw CliError(input, "verify limited to n <= " + std::to_string(kVerifyLimit));
        if (auto f = check_arcs(arcs, a.block)) {
            const auto small = shrink(arcs, [&](const sig::ArcRealization& r) { return check_arcs(r, a.block).has_value(); });
            std::ostringstream out;
            sig::text::write(out, small);
            return report_failure(*check_arcs(small, a.block), out.str(), trial);
        }
        ++checked;
        return std::nullopt;
    };

    if (!a.input.empty()) {
        const auto in = read_input(a.input);
        std::optional<int> bad;
        if (a.type == "circular") {
            const auto* arcs = std::get_if<sig::text::ArcInput>(&in);
            if (!arcs) throw CliError(input, "type 'circular' needs a 'circular <n>' input");
            bad = run_arcs(sig::normalize_arcs(arcs->arcs), 0);
        } else {
            const auto* iv = std::get_if<sig::text::IntervalInput>(&in);
            if (!iv) throw CliError(input, "type '" + a.type + "' needs an 'interval <n>' input");
            bad = run_intervals(sig::normalize(iv->intervals), 0);
        }
        if (bad) return *bad;
    } else {
        if (a.n == 0) throw CliError(input, "verify needs --input or --random N");
        std::mt19937_64 rng(a.seed);
        for (std::size_t t = 0; t < a.trials; ++t) {
            std::optional<int> bad;
            if (a.type == "circular") bad = run_arcs(sig::random::arcs(a.n, rng), t);
            else if (a.type == "proper") bad = run_intervals(sig::random::proper_intervals(a.n, rng), t);
            else bad = run_intervals(sig::random::intervals(a.n, rng), t);
            if (bad) return *bad;
        }
    }
    if (as_json) std::cout << json{{"result", "PASS"}, {"type", a.type}, {"instances", checked}}.dump() << '\n';
    else std::cout << "PASS " << checked << " instance(s), type " << a.type << '\n';
    return ok;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
    std::string type = "interval";
    std::size_t n = 100000;
    std::size_t queries = 10000;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::size_t block = sig::RangeMaxIndex::default_block;
};

template <class G>
json time_queries(const G& g, const BenchArgs& a) {
    const std::size_t n = g.size();
    // neighborhood output is O(degree) and spath O(distance), so they get a
    // smaller share; neighborhood is also reported per emitted neighbor
    const std::size_t spath_queries = std::max<std::size_t>(1, a.queries / 10);
    const std::size_t list_queries = std::max<std::size_t>(1, a.queries / 100);
    auto timed = [&](const char* name, std::size_t count, auto&& body) {
        std::vector<std::uint64_t> sink(a.threads, 0);
        const auto t0 = Clock::now();
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < a.threads; ++t)
            pool.emplace_back([&, t] {
                std::mt19937_64 rng(a.seed * 7919 + t);
                std::uniform_int_distribution<Vertex> pick(1, n);
                for (std::size_t i = t; i < count; i += a.threads) sink[t] += body(pick(rng), pick(rng));
            });
        for (auto& th : pool) th.join();
        const double ms = ms_since(t0);
        std::uint64_t total = 0;
        for (auto s : sink) total += s;
        json q{{"query", name}, {"count", count}, {"ns_per_query", ms * 1e6 / static_cast<double>(count)}, {"checksum", total}};
        if (std::string(name) == "neighborhood" && total > 0) q["ns_per_neighbor"] = ms * 1e6 / static_cast<double>(total);
        return q;
    };
    json out = json::array();
    out.push_back(timed("degree", a.queries, [&](Vertex u, Vertex) { return g.degree(u); }));
    out.push_back(timed("adjacent", a.queries, [&](Vertex u, Vertex v) { return std::uint64_t(g.adjacent(u, v)); }));
    out.push_back(timed("neighborhood", list_queries, [&](Vertex u, Vertex) { return g.neighborhood(u).size(); }));
    out.push_back(timed("spath", spath_queries, [&](Vertex u, Vertex v) {
        const auto p = g.spath(u, v);
        return p ? p->size() : 0;
    }));
    return out;
}

int cmd_bench(const BenchArgs& a, bool as_json) {
    if (a.n == 0) throw CliError(input, "--n must be at least 1");
    if (a.threads == 0) throw CliError(input, "--threads must be at least 1");
    std::mt19937_64 rng(a.seed);
    AnyGraph g;
    std::size_t edges = 0;
    const auto t0 = Clock::now();
    if (a.type == "circular") {
        g = build_arcs(sig::random::arcs(a.n, rng), with_block(a.block));
    } else {
        const auto real = a.type == "proper" ? sig::random::proper_intervals(a.n, rng) : sig::random::intervals(a.n, rng);
        g = build_intervals(a.type, real, with_block(a.block));
    }
    const double build_ms = ms_since(t0);
    std::visit(
        [&](const auto& x) {
            for (Vertex v = 1; v <= x.size(); ++v) edges += x.degree(v);
        },
        g);
    edges /= 2;
    json j = space_json(g);
    const double n = static_cast<double>(a.n);
    const double log2n = std::log2(2.0 * n);
    const double idx_bits = std::max(1.0, std::ceil(std::log2(n)));
    j["build_ms"] = build_ms;
    j["edges"] = edges;
    j["baseline_endpoints_bits"] = 2.0 * n * std::ceil(log2n);
    j["baseline_adjacency_bits"] = (n + 1) * 64.0 + 2.0 * static_cast<double>(edges) * idx_bits;
    j["total_over_n_log2_2n"] = static_cast<double>(j["total_bits"].get<std::uint64_t>()) / (n * log2n);
    j["total_over_n"] = static_cast<double>(j["total_bits"].get<std::uint64_t>()) / n;
    j["threads"] = a.threads;
    j["queries"] = std::visit([&](const auto& x) { return time_queries(x, a); }, g);
    if (as_json) {
        std::cout << j.dump() << '\n';
        return ok;
    }
    json plain = j;
    plain.erase("queries");
    print_report(plain);
    std::cout << "queries\n";
    for (const auto& q : j["queries"])
    {
        std::cout << "  " << q["query"].get<std::string>() << ' ' << q["ns_per_query"].get<double>() << " ns (" << q["count"] << ")";
        if (q.contains("ns_per_neighbor")) std::cout << ", " << q["ns_per_neighbor"].get<double>() << " ns per neighbor";
        std::cout << '\n';
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Succinct interval and circular-arc graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string type = "interval", in_path, out_path;
    BuildOptions bopt;
    std::size_t anchor = 0;
    auto* build = app.add_subcommand("build", "Build a structure from a text realization");
    build->add_option("--type", type, "interval|proper|kproper|kimproper|circular")->check(CLI::IsMember(kTypes));
    build->add_option("--input,-i", in_path, "Text realization")->required();
    build->add_option("--output,-o", out_path, "Binary output file")->required();
    build->add_option("--block", bopt.block, "Range-max block size")->check(CLI::PositiveNumber);
    build->add_option("--anchor", anchor, "Circular: 1-based input arc that gets label 1");
    build->add_flag("--degree-table", bopt.degree_table, "Circular: store every degree explicitly");

    std::string file, op;
    std::vector<std::string> qargs;
    auto* query_cmd = app.add_subcommand("query", "Answer one query on a built structure");
    query_cmd->add_option("file", file)->required();
    query_cmd->add_option("op", op, "degree|adjacent|neighborhood|spath|succ|interval")->required();
    query_cmd->add_option("vertices", qargs);

    std::string algo_name;
    auto* algo = app.add_subcommand("algo", "Run a graph algorithm on an interval or proper structure");
    algo->add_option("file", file)->required();
    algo->add_option("name", algo_name, "mis|mvc|clique|coloring|dfs|bfs|peo")->required();

    VerifyArgs vargs;
    vargs.seed = 0;
    std::optional<std::uint64_t> vseed;
    auto* verify = app.add_subcommand("verify", "Compare against brute-force answers");
    verify->add_option("--type", vargs.type)->check(CLI::IsMember(kTypes));
    verify->add_option("--input,-i", vargs.input);
    verify->add_option("--random", vargs.n, "Vertices per random instance");
    verify->add_option("--seed", vseed);
    verify->add_option("--trials", vargs.trials);
    verify->add_option("--block", vargs.block)->check(CLI::PositiveNumber);

    BenchArgs bargs;
    std::optional<std::uint64_t> bseed;
    auto* bench = app.add_subcommand("bench", "Space report and query timings on a random instance");
    bench->add_option("--type", bargs.type)->check(CLI::IsMember(kTypes));
    bench->add_option("--n", bargs.n);
    bench->add_option("--queries", bargs.queries);
    bench->add_option("--seed", bseed);
    bench->add_option("--threads", bargs.threads);
    bench->add_option("--block", bargs.block)->check(CLI::PositiveNumber);

    auto* stats = app.add_subcommand("stats", "Space breakdown of a built structure");
    stats->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input;
    }

    try {
        if (*build) {
            if (anchor) bopt.anchor = anchor;
            const auto in = read_input(in_path);
            const auto t0 = Clock::now();
            const auto g = build_from(type, in, bopt);
            const double ms = ms_since(t0);
            save(g, out_path);
            auto j = space_json(g);
            j["build_ms"] = ms;
            j["output"] = out_path;
            emit(j, as_json);
            return ok;
        }
        if (*query_cmd) return cmd_query(file, op, qargs, as_json);
        if (*algo) return cmd_algo(file, algo_name, as_json);
        if (*verify) {
            vargs.seed = vseed ? *vseed : default_seed();
            return cmd_verify(vargs, as_json);
        }
        if (*bench) {
            bargs.seed = bseed ? *bseed : default_seed();
            return cmd_bench(bargs, as_json);
        }
        if (*stats) {
            emit(space_json(load(file)), as_json);
            return ok;
        }
    } catch (const CliError& e) {
        std::cerr << "sig: " << e.what() << '\n';
        return e.code;
    } catch (const sig::parse_error& e) {
        std::cerr << "sig: parse error, " << e.what() << '\n';
        return input;
    } catch (const sig::realization_error& e) {
        std::cerr << "sig: " << e.what() << '\n';
        return input;
    } catch (const sig::format_error& e) {
        std::cerr << "sig: bad structure file: " << e.what() << '\n';
        return input;
    } catch (const std::exception& e) {
        std::cerr << "sig: internal error: " << e.what() << '\n';
        return internal;
    }
    return internal;
}
