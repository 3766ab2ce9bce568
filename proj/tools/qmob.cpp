// Command line front end: every command reads .qrep files, prints one line of
// JSON to stdout and exits 0, or prints {"error": ...} and exits 1.  Usage
// mistakes exit 2.  Exact integers and rationals are serialized as strings.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmob/finiteness.hpp"
#include "qmob/lattice.hpp"
#include "qmob/mobius.hpp"
#include "qmob/qrep_format.hpp"

using nlohmann::ordered_json;
using namespace qmob;

namespace {

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

std::vector<std::string> subrep_basis_strings(const Subspace& s) {
    std::vector<std::string> rows;
    for (int r = 0; r < s.dim(); ++r) {
        std::string row;
        for (int c = 0; c < s.ambient(); ++c) {
            if (c)
                row += ",";
            row += s.basis().at(r, c).get_str();
        }
        rows.push_back("[" + row + "]");
    }
    return rows;
}

ordered_json witness_json(const Subrep& u) {
    ordered_json w;
    w["dims"] = subrep_dims(u);
    ordered_json bases = ordered_json::array();
    for (const Subspace& s : u.spaces) bases.push_back(subrep_basis_strings(s));
    w["bases"] = std::move(bases);
    return w;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DomainError("cannot write file: " + path);
    out << content;
    if (!out)
        throw DomainError("cannot write file: " + path);
}

int cmd_validate(const std::string& file) {
    Representation m = parse_qrep_file(file);
    ordered_json j;
    j["ok"] = true;
    if (!m.name.empty())
        j["name"] = m.name;
    j["field"] = m.field.to_string();
    j["dimension_vector"] = m.dims;
    emit(j);
    return 0;
}

int cmd_info(const std::string& file) {
    Representation m = parse_qrep_file(file);
    ordered_json j;
    if (!m.name.empty())
        j["name"] = m.name;
    j["field"] = m.field.to_string();
    j["vertices"] = m.quiver.n_vertices();
    ordered_json arrows = ordered_json::array();
    for (const Arrow& a : m.quiver.arrows())
        arrows.push_back(a.name + ": " + std::to_string(a.source) + " -> " +
                         std::to_string(a.target));
    j["arrows"] = std::move(arrows);
    j["relations"] = m.relations.size();
    j["dimension_vector"] = m.dims;
    j["total_dim"] = total_dim(m);
    j["thin"] = is_thin(m);
    j["semisimple"] = is_semisimple(m);
    j["socle_dims"] = subrep_dims(socle(m));
    j["radical_dims"] = subrep_dims(radical(m));
    emit(j);
    return 0;
}

int cmd_mobius(const std::string& file, const std::string& method, std::uint64_t cap,
               int threads) {
    Representation m = parse_qrep_file(file);
    MobiusReport r = method == "brute" ? mobius_rep_bruteforce(m, cap, threads)
                                       : mobius_rep(m);
    ordered_json j;
    j["mobius"] = r.value.get_str();
    j["method"] = to_string(r.method);
    emit(j);
    return 0;
}

int cmd_lattice(const std::string& file, const std::string& dot_path,
                const std::string& json_path, std::uint64_t cap, int threads) {
    Representation m = parse_qrep_file(file);
    SubmoduleLattice lat = enumerate_subreps(m, cap, threads);
    ordered_json j;
    j["size"] = lat.size();
    j["mobius"] = mobius_bruteforce(lat).get_str();
    j["atoms"] = atoms_of(lat).size();
    j["coatoms"] = coatoms_of(lat).size();
    ordered_json by_length;
    for (const auto& [len, cnt] : count_by_length(lat))
        by_length[std::to_string(len)] = cnt.get_str();
    j["by_length"] = std::move(by_length);
    if (!dot_path.empty())
        write_file(dot_path, lattice_to_dot(lat));
    if (!json_path.empty())
        write_file(json_path, lattice_to_json(lat).dump(2) + "\n");
    emit(j);
    return 0;
}

int cmd_count(const std::string& q_str, int t, int length, bool have_length) {
    for (char c : q_str)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw DomainError("--q expects a nonnegative integer, got '" + q_str + "'");
    Int q(q_str);
    ordered_json j;
    j["q"] = q.get_str();
    j["t"] = t;
    if (have_length) {
        j["length"] = length;
        j["count"] = count_length_l(q, t, length).get_str();
    } else {
        j["simple_submodules"] = count_simple_submodules(q, t).get_str();
        j["maximal_submodules"] = count_maximal(q, t).get_str();
    }
    emit(j);
    return 0;
}

int cmd_ortho(const std::string& file_a, const std::string& file_b, std::uint64_t cap,
              int threads) {
    Representation a = parse_qrep_file(file_a);
    Representation b = parse_qrep_file(file_b);
    OrthoResult r = is_poset_orthogonal(a, b, cap, threads);
    ordered_json j;
    j["poset_orthogonal"] = r.orthogonal;
    j["orthocyclic"] = is_orthocyclic(a, b, cap);
    j["witness"] = r.witness ? witness_json(*r.witness) : ordered_json(nullptr);
    emit(j);
    return 0;
}

int cmd_witness(const std::string& file) {
    Representation m = parse_qrep_file(file);
    FinitenessVerdict v = decide_finiteness(m);
    ordered_json j;
    j["verdict"] = to_string(v.verdict);
    j["reason"] = to_string(v.reason);
    if (v.witness) {
        ordered_json w;
        w["vertex"] = v.witness->vertex;
        w["sinking_set"] = v.witness->sinking_set;
        w["quotient_dims"] = dimension_vector(v.witness->quotient);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    emit(j);
    return 0;
}

int cmd_invert(const std::string& file, std::uint64_t cap) {
    Representation m = parse_qrep_file(file);
    // Inverts the constant function g = 1: the reported value is the sum of
    // mu(M/N) over the maximal-radical interval, i.e. the recovered f(M) when
    // every downward sum of f equals 1.
    Rat value = mobius_inversion_module(
        m, [](const Subrep&) { return Rat(1); }, cap);
    QuotientResult top = quotient(m, radical(m));
    ordered_json j;
    j["value"] = value.get_str();
    j["interval_size"] = enumerate_subreps(top.rep, cap).size();
    emit(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact submodule lattice and Mobius function toolkit"};
    app.require_subcommand(1);

    std::string file, file_b, method = "closed", dot_path, json_path, q_str;
    std::uint64_t cap = kDefaultLatticeCap;
    int threads = 1, t_arg = 0, length = 0;

    auto* validate_cmd = app.add_subcommand("validate", "Parse a .qrep file and check it");
    validate_cmd->add_option("file", file, "input .qrep file")->required();

    auto* info = app.add_subcommand("info", "Structural summary of a representation");
    info->add_option("file", file, "input .qrep file")->required();

    auto* mobius = app.add_subcommand("mobius", "Mobius invariant of the submodule lattice");
    mobius->add_option("file", file, "input .qrep file")->required();
    mobius->add_option("--method", method, "closed or brute")
        ->check(CLI::IsMember({"closed", "brute"}));
    mobius->add_option("--cap", cap, "enumeration cap for brute force");
    mobius->add_option("--threads", threads, "worker threads for brute force");

    auto* lattice = app.add_subcommand("lattice", "Enumerate the submodule lattice");
    lattice->add_option("file", file, "input .qrep file")->required();
    lattice->add_option("--dot", dot_path, "write a Hasse diagram in DOT format");
    lattice->add_option("--json", json_path, "write the full lattice as JSON");
    lattice->add_option("--cap", cap, "enumeration cap");
    lattice->add_option("--threads", threads, "worker threads");

    auto* count = app.add_subcommand("count", "Closed-form submodule counts for S^t");
    count->add_option("--q", q_str, "field size, at least 2")->required();
    count->add_option("--t", t_arg, "number of simple summands")->required();
    auto* len_opt = count->add_option("--length", length, "count submodules of this length");

    auto* ortho = app.add_subcommand("ortho", "Test a pair for poset orthogonality");
    ortho->add_option("a", file, "first .qrep file")->required();
    ortho->add_option("b", file_b, "second .qrep file")->required();
    ortho->add_option("--cap", cap, "enumeration cap");
    ortho->add_option("--threads", threads, "worker threads");

    auto* witness = app.add_subcommand("witness", "Decide lattice finiteness with a witness");
    witness->add_option("file", file, "input .qrep file")->required();

    auto* invert = app.add_subcommand("invert",
                                      "Mobius inversion of the constant weight 1 "
                                      "over the top radical interval");
    invert->add_option("file", file, "input .qrep file")->required();
    invert->add_option("--cap", cap, "enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (validate_cmd->parsed())
            return cmd_validate(file);
        if (info->parsed())
            return cmd_info(file);
        if (mobius->parsed())
            return cmd_mobius(file, method, cap, threads);
        if (lattice->parsed())
            return cmd_lattice(file, dot_path, json_path, cap, threads);
        if (count->parsed())
            return cmd_count(q_str, t_arg, length, len_opt->count() > 0);
        if (ortho->parsed())
            return cmd_ortho(file, file_b, cap, threads);
        if (witness->parsed())
            return cmd_witness(file);
        if (invert->parsed())
            return cmd_invert(file, cap);
    } catch (const CapExceeded& e) {
        ordered_json j;
        j["error"]["code"] = e.code();
        j["error"]["message"] = e.what();
        j["error"]["count_so_far"] = e.count_so_far;
        emit(j);
        return 1;
    } catch (const Error& e) {
        ordered_json j;
        j["error"]["code"] = e.code();
        j["error"]["message"] = e.what();
        emit(j);
        return 1;
    } catch (const std::exception& e) {
        ordered_json j;
        j["error"]["code"] = "InternalError";
        j["error"]["message"] = e.what();
        emit(j);
        return 1;
    }
    return 2;
}
