#include <fstream>
#include <sstream>

#include "domlab/generators.hpp"
#include "domlab/graph6.hpp"
#include "domlab/harness.hpp"

namespace domlab {

Graph parse_graph_spec(std::string_view text) {
    if (is_named_graph(text)) return named_graph(text);
    return parse_graph6(text);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the pair.
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + index + 0x632be59bd9b4e019ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

struct GeneratorSpec {
    std::string kind;
    std::map<std::string, std::string> params;

    const std::string& get(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end()) throw CorpusError("generator spec '" + kind + "' needs " + key + "=");
        return it->second;
    }
    long long integer(const std::string& key) const {
        const std::string& v = get(key);
        std::size_t used = 0;
        long long out = 0;
        try {
            out = std::stoll(v, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != v.size()) throw CorpusError("not an integer: " + key + "=" + v);
        return out;
    }
    long long integer_or(const std::string& key, long long fallback) const {
        return params.count(key) ? integer(key) : fallback;
    }
};

GeneratorSpec parse_spec(std::string_view text) {
    std::istringstream in{std::string(text)};
    GeneratorSpec spec;
    in >> spec.kind;
    std::string token;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) throw CorpusError("expected key=value, got '" + token + "'");
        spec.params[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return spec;
}

}  // namespace

bool is_generator_spec(std::string_view text) { return text.rfind("random-", 0) == 0; }

std::vector<CorpusEntry> generate_corpus(std::string_view text, std::uint64_t default_seed) {
    const GeneratorSpec spec = parse_spec(text);
    const long long count = spec.integer("count");
    const int n = static_cast<int>(spec.integer("n"));
    const auto seed = static_cast<std::uint64_t>(spec.integer_or("seed", static_cast<long long>(default_seed)));
    if (count < 0 || n < 0) throw CorpusError("count and n must be non-negative");

    std::vector<CorpusEntry> out;
    for (long long i = 0; i < count; ++i) {
        const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(i));
        Graph g;
        try {
            if (spec.kind == "random-cubic") {
                g = random_cubic(n, s);
            } else if (spec.kind == "random-gnp") {
                g = random_gnp(n, std::stod(spec.get("p")), s);
            } else if (spec.kind == "random-maxdeg") {
                const int d = static_cast<int>(spec.integer("d"));
                g = random_bounded_degree(n, d, static_cast<int>(spec.integer_or("attempts", 2LL * n * d)), s);
            } else {
                throw CorpusError("unknown generator '" + spec.kind + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw CorpusError(std::string(text) + ": " + e.what());
        }
        out.push_back({spec.kind + "#" + std::to_string(i), std::move(g)});
    }
    return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& source, std::uint64_t default_seed) {
    if (is_generator_spec(source)) return generate_corpus(source, default_seed);
    std::ifstream in(source);
    if (!in) throw CorpusError("cannot read corpus '" + source + "'");
    std::vector<CorpusEntry> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            out.push_back({line, parse_graph_spec(line)});
        } catch (const std::exception& e) {
            throw CorpusError(source + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace domlab
