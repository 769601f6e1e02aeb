#include "cluster_poset/cluster.hpp"
#include "cluster_poset/functors.hpp"
#include "cluster_poset/poset.hpp"
#include "cluster_poset/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace cpo;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Input {
    Quiver q;
    std::string path;
    std::string hash;
};

Input load_quiver(const std::string& path) {
    std::string text = read_file(path);
    try {
        return {parse_quiver(text), path, fnv1a64(text)};
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

json stamp(json report, const Input& in) {
    report["tool"] = "cluster-poset";
    report["version"] = kVersion;
    report["input"] = in.path;
    report["input_hash"] = in.hash;
    return report;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + out_path);
    out << text;
    if (text.empty() || text.back() != '\n')
        out << '\n';
}

int vertex_index(const Quiver& q, const std::string& label) {
    int x = q.index_of(label);
    if (x < 0)
        throw InputError("vertex '" + label + "' not in quiver");
    return x;
}

int cmd_enumerate(const std::string& quiver_path, const std::string& out_path) {
    Input in = load_quiver(quiver_path);
    std::vector<ClusterTilting> objs;
    try {
        objs = enumerate_cluster_tilting(in.q);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    json rep{{"count", objs.size()}, {"objects", objs}};
    emit(stamp(rep, in).dump(2), out_path);
    return 0;
}

int cmd_poset(const std::string& quiver_path, const std::string& format,
              const std::string& out_path) {
    Input in = load_quiver(quiver_path);
    FinitePoset p;
    try {
        p = to_finite_poset(tilting_poset(in.q));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    auto covers = hasse(p);
    if (format == "dot") {
        emit(to_dot(p), out_path);
    } else if (format == "csv") {
        std::ostringstream os;
        os << "from,to\n";
        for (const auto& [i, j] : covers)
            os << '"' << p.elements[i] << "\",\"" << p.elements[j] << "\"\n";
        emit(os.str(), out_path);
    } else {
        json rep{{"elements", p.elements}, {"covers", covers}};
        emit(stamp(rep, in).dump(2), out_path);
    }
    return 0;
}

int cmd_verify(const std::string& quiver_path, const std::string& which,
               const std::string& vertex, const std::string& out_path) {
    Input in = load_quiver(quiver_path);
    json rep;
    try {
        if (which == "lemmas") {
            rep = lemma_suite(in.q);
        } else {
            if (vertex.empty())
                throw InputError("--vertex is required for " + which);
            int x = vertex_index(in.q, vertex);
            rep = which == "flipflop" ? verify_flipflop(in.q, x) : verify_square(in.q, x);
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    emit(stamp(rep, in).dump(2), out_path);
    return rep["passed"] == true ? 0 : 1;
}

int cmd_invariants(const std::vector<std::string>& quiver_paths,
                   const std::string& format, const std::string& out_path) {
    json rows = json::array();
    std::vector<IntPoly> polys;
    for (const std::string& path : quiver_paths) {
        Input in = load_quiver(path);
        IntPoly poly;
        try {
            poly = coxeter_polynomial(to_finite_poset(tilting_poset(in.q)));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        polys.push_back(poly);
        rows.push_back({{"quiver", path},
                        {"input_hash", in.hash},
                        {"coxeter_polynomial", poly_to_string(poly)},
                        {"equal_to_first", poly == polys.front()}});
    }
    bool all_equal = true;
    for (const IntPoly& p : polys)
        all_equal = all_equal && p == polys.front();
    if (format == "csv") {
        std::ostringstream os;
        os << "quiver,coxeter_polynomial,equal_to_first\n";
        for (const auto& row : rows)
            os << row["quiver"].get<std::string>() << ",\""
               << row["coxeter_polynomial"].get<std::string>() << "\","
               << (row["equal_to_first"] == true ? "yes" : "no") << "\n";
        emit(os.str(), out_path);
    } else {
        json rep{{"tool", "cluster-poset"},
                 {"version", kVersion},
                 {"rows", rows},
                 {"all_equal", all_equal}};
        emit(rep.dump(2), out_path);
    }
    return 0;
}

bool is_linear_a(const Quiver& q) {
    auto t = classify_dynkin(q);
    if (!t || t->family != 'A')
        return false;
    for (int v = 0; v < q.size(); ++v) {
        int in = 0, out = 0;
        for (const auto& [s, tg] : q.arrows) {
            in += tg == v;
            out += s == v;
        }
        if (in > 1 || out > 1)
            return false;
    }
    return true;
}

int cmd_oracle(const std::string& quiver_path, const std::string& which,
               const std::string& out_path) {
    Input in = load_quiver(quiver_path);
    if (which != "tamari")
        throw InputError("unknown oracle '" + which + "'");
    if (!is_linear_a(in.q))
        throw InputError("tamari oracle needs a linearly oriented type A quiver");
    FinitePoset tp = to_finite_poset(tilting_poset(in.q));
    FinitePoset tam = tamari(in.q.size() + 1);
    bool iso = are_isomorphic(tp, tam);
    json rep{{"oracle", "tamari"},
             {"poset_size", tp.size()},
             {"tamari_size", tam.size()},
             {"passed", iso}};
    emit(stamp(rep, in).dump(2), out_path);
    return iso ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cluster tilting posets for Dynkin quivers"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string quiver_path, vertex, which, format = "json", out_path;
    std::vector<std::string> quiver_paths;

    auto* enumerate = app.add_subcommand("enumerate", "list all cluster tilting objects");
    enumerate->add_option("--quiver", quiver_path, "quiver JSON file")->required();
    enumerate->add_option("--out", out_path, "output path (default stdout)");

    auto* poset = app.add_subcommand("poset", "export the tilting poset");
    poset->add_option("--quiver", quiver_path, "quiver JSON file")->required();
    poset->add_option("--format", format, "json|dot|csv")
        ->check(CLI::IsMember({"json", "dot", "csv"}));
    poset->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a structural check suite");
    verify->add_option("--quiver", quiver_path, "quiver JSON file")->required();
    verify->add_option("--which", which, "flipflop|square|lemmas")
        ->required()
        ->check(CLI::IsMember({"flipflop", "square", "lemmas"}));
    verify->add_option("--vertex", vertex, "vertex label (sink)");
    verify->add_option("--out", out_path, "output path (default stdout)");

    auto* invariants = app.add_subcommand("invariants", "Coxeter polynomial table");
    invariants->add_option("--quiver", quiver_paths, "quiver JSON files")
        ->required()
        ->expected(-1);
    invariants->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    invariants->add_option("--out", out_path, "output path (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "independent combinatorial cross-check");
    oracle->add_option("--quiver", quiver_path, "quiver JSON file")->required();
    oracle->add_option("--which", which, "tamari")->default_val("tamari");
    oracle->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(quiver_path, out_path);
        if (*poset)
            return cmd_poset(quiver_path, format, out_path);
        if (*verify)
            return cmd_verify(quiver_path, which, vertex, out_path);
        if (*invariants)
            return cmd_invariants(quiver_paths, format, out_path);
        if (*oracle)
            return cmd_oracle(quiver_path, which.empty() ? "tamari" : which, out_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
