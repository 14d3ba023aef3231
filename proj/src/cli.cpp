#include "hypcert/cli.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypcert/freelie.hpp"
#include "hypcert/hyperbolicity.hpp"
#include "hypcert/io.hpp"
#include "hypcert/ktheory.hpp"
#include "hypcert/numtheory.hpp"
#include "hypcert/oracles.hpp"
#include "hypcert/poincare.hpp"
#include "hypcert/stems.hpp"

namespace hypcert::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitHypothesisFailure = 2;

long long require_prime(long long p) {
    if (!numtheory::is_prime(p))
        throw CLI::ValidationError("--p", std::to_string(p) + " is not prime");
    return p;
}

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(piece, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "expected a comma-separated integer list");
        }
        if (used != piece.size() || value < 1)
            throw CLI::ValidationError(what, "entries must be positive integers");
        out.push_back(value);
    }
    if (out.empty())
        throw CLI::ValidationError(what, "list must be nonempty");
    return out;
}

// Rows separated by ';', entries by ','. Entries may be any integers; they
// are reduced mod p.
std::pair<std::vector<long long>, std::vector<long long>>
parse_matrix(const std::string& text) {
    std::vector<std::vector<long long>> rows;
    std::istringstream is(text);
    std::string row_text;
    while (std::getline(is, row_text, ';')) {
        std::vector<long long> row;
        std::istringstream row_is(row_text);
        std::string piece;
        while (std::getline(row_is, piece, ',')) {
            try {
                row.push_back(std::stoll(piece));
            } catch (const std::exception&) {
                throw CLI::ValidationError("--map-matrix", "expected integer entries");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() != 2 || rows[0].empty() || rows[0].size() != rows[1].size())
        throw CLI::ValidationError("--map-matrix",
                                   "expected two ';'-separated rows of equal length");
    return {rows[0], rows[1]};
}

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "text")
        return Format::Text;
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    throw CLI::ValidationError("--format", "expected json, csv or text");
}

struct WittArgs {
    long long n = 0, k = 0;
    std::string format = "text";
};

struct HallArgs {
    std::string degrees;
    long long max_weight = 0;
    bool elements = false;
    std::string format = "text";
};

struct StemsArgs {
    long long p = 0, r = 0;
    std::string format = "json";
};

struct CensusArgs {
    std::string space;
    long long q1 = 0, q2 = 0;
    long long p = 0, r = 0, kmax = 0;
    std::string format = "json";
};

struct CertifyArgs {
    std::string space;
    long long p = 0, kmax = 0;
    std::string map_matrix;
    std::string input_mode = "k-theory";
    long long q1 = 0, q2 = 0;
    std::string format = "json";
};

struct CatalogArgs {
    std::string space;
    std::string format = "json";
};

struct OracleArgs {
    std::string scope = "all";
    std::string format = "text";
};

int run_witt(const WittArgs& args, std::ostream& out) {
    BigInt value = numtheory::witt(args.n, args.k);
    switch (parse_format(args.format)) {
    case Format::Text:
        out << value.str() << "\n";
        break;
    case Format::Json: {
        ordered_json j{{"n", args.n}, {"k", args.k}, {"witt", value.str()}};
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "n,k,witt\n" << args.n << ',' << args.k << ',' << value.str() << "\n";
        break;
    }
    return kExitOk;
}

int run_hall(const HallArgs& args, std::ostream& out) {
    freelie::GeneratorSpec spec{parse_int_list(args.degrees, "--degrees")};
    freelie::HallBasis basis(spec, static_cast<int>(args.max_weight));

    switch (parse_format(args.format)) {
    case Format::Text:
        for (int k = 1; k <= basis.max_weight(); ++k) {
            const auto& ids = basis.weight_class(k);
            out << "k=" << k << " count=" << ids.size() << "\n";
            if (args.elements)
                for (int32_t id : ids)
                    out << "  " << basis.to_string(id) << " degree=" << basis.node(id).degree
                        << "\n";
        }
        break;
    case Format::Json: {
        ordered_json weights = ordered_json::array();
        for (int k = 1; k <= basis.max_weight(); ++k) {
            const auto& ids = basis.weight_class(k);
            ordered_json entry{{"k", k}, {"count", ids.size()}};
            if (args.elements) {
                ordered_json elements = ordered_json::array();
                for (int32_t id : ids)
                    elements.push_back(ordered_json{{"product", basis.to_string(id)},
                                                    {"degree", basis.node(id).degree}});
                entry["elements"] = std::move(elements);
            }
            weights.push_back(std::move(entry));
        }
        ordered_json j{{"degrees", spec.degrees}, {"weights", std::move(weights)}};
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        if (args.elements) {
            out << "k,product,degree\n";
            for (int k = 1; k <= basis.max_weight(); ++k)
                for (int32_t id : basis.weight_class(k))
                    out << k << ",\"" << basis.to_string(id) << "\","
                        << basis.node(id).degree << "\n";
        } else {
            out << "k,count\n";
            for (int k = 1; k <= basis.max_weight(); ++k)
                out << k << ',' << basis.weight_class(k).size() << "\n";
        }
        break;
    }
    return kExitOk;
}

int run_stems(const StemsArgs& args, std::ostream& out) {
    auto witness = stems::stable_summand_stem(require_prime(args.p), args.r);
    switch (parse_format(args.format)) {
    case Format::Text:
        out << "p=" << witness.p << " r=" << witness.r << " j=" << witness.j
            << " case=" << stems::to_string(witness.witness_case);
        if (witness.t)
            out << " t=" << *witness.t;
        out << " stable_from=" << witness.stable_from() << "\n";
        break;
    case Format::Json: {
        ordered_json j;
        j["p"] = witness.p;
        j["r"] = witness.r;
        j["j"] = witness.j;
        j["case"] = stems::to_string(witness.witness_case);
        if (witness.t)
            j["t"] = *witness.t;
        j["stable_from"] = witness.stable_from();
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "p,r,j,case,t,stable_from\n"
            << witness.p << ',' << witness.r << ',' << witness.j << ','
            << stems::to_string(witness.witness_case) << ','
            << (witness.t ? std::to_string(*witness.t) : std::string{}) << ','
            << witness.stable_from() << "\n";
        break;
    }
    return kExitOk;
}

int run_census(const CensusArgs& args, std::ostream& out) {
    long long p = require_prime(args.p);
    long long q1 = args.q1, q2 = args.q2;
    std::string label;

    if (!args.space.empty()) {
        auto id = spaces::SpaceId::parse(args.space);
        auto entry = hyp::retract_catalog(id);
        if (entry.excluded_primes.count(p)) {
            out << io::failure_json(args.space, p,
                                    "the wedge retract of '" + args.space +
                                        "' is only available away from prime " +
                                        std::to_string(p));
            return kExitHypothesisFailure;
        }
        q1 = entry.q1;
        q2 = entry.q2;
        label = args.space;
    } else if (q1 < 1 || q2 < 1) {
        throw CLI::ValidationError("--q1/--q2", "census needs --q1/--q2 or --space");
    }

    auto census = hyp::wedge_summand_census(q1, q2, p, args.r, args.kmax);
    if (!label.empty())
        census.space = label;
    switch (parse_format(args.format)) {
    case Format::Text: out << io::to_text(census); break;
    case Format::Json: out << io::to_json(census); break;
    case Format::Csv: out << io::to_csv(census); break;
    }
    return kExitOk;
}

int run_certify(const CertifyArgs& args, std::ostream& out) {
    long long p = require_prime(args.p);
    auto id = spaces::SpaceId::parse(args.space);

    hyp::CertifyResult result = [&]() -> hyp::CertifyResult {
        if (p % 2 == 0)
            return hyp::HypothesisFailure{"certification requires an odd prime, got p=2"};
        if (!args.map_matrix.empty()) {
            auto [row0, row1] = parse_matrix(args.map_matrix);
            long long q1 = args.q1, q2 = args.q2;
            if (q1 < 1 || q2 < 1) {
                auto builtin = ktheory::builtin_wedge_map(id, p);
                if (!builtin)
                    throw CLI::ValidationError(
                        "--q1/--q2", "explicit matrices need wedge degrees for this space");
                q1 = builtin->q1;
                q2 = builtin->q2;
            }
            if (args.input_mode != "k-theory" && args.input_mode != "cohomology")
                throw CLI::ValidationError("--input-mode", "expected k-theory or cohomology");
            auto mode = args.input_mode == "k-theory"
                            ? ktheory::InputMode::KTheory
                            : ktheory::InputMode::CohomologyAhssCollapse;
            auto map = ktheory::make_modp_map(p, q1, q2, row0, row1, mode);
            return hyp::k_detection_certificate(args.space, ktheory::kmodel_for_space(id),
                                                map, p, args.kmax);
        }
        return hyp::k_detection_certificate(id, p, args.kmax);
    }();

    if (const auto* failure = std::get_if<hyp::HypothesisFailure>(&result)) {
        out << io::failure_json(args.space, p, failure->reason);
        return kExitHypothesisFailure;
    }
    const auto& cert = std::get<hyp::PHypCertificate>(result);
    switch (parse_format(args.format)) {
    case Format::Text: out << io::to_text(cert); break;
    case Format::Json: out << io::to_json(cert); break;
    case Format::Csv: out << io::to_csv(cert); break;
    }
    return kExitOk;
}

ordered_json catalog_entry_json(const spaces::SpaceId& id) {
    ordered_json j;
    j["space"] = id.str();
    using Family = spaces::SpaceId::Family;
    bool has_poincare = id.family == Family::CP || id.family == Family::Gr ||
                        id.family == Family::Milnor || id.family == Family::U ||
                        id.family == Family::Sphere || id.family == Family::Wedge;
    if (has_poincare) {
        auto poly = spaces::poincare_polynomial(id);
        j["poincare"] = poly.coefficients();
        j["total_betti"] = poly.total_betti();
        j["connectivity"] = spaces::connectivity(id);
        j["externally_sourced"] = spaces::externally_sourced(id);
        auto model = ktheory::kmodel_for_space(id);
        j["kmodel"] = ordered_json{{"even_exponents", model.even_exponents},
                                   {"susp_exponents", model.susp_exponents}};
        j["lambda_exponent"] = ktheory::lambda_exponent(model);
        auto map = ktheory::builtin_wedge_map(id, 3);
        if (map)
            j["certify_map"] = ordered_json{{"q1", map->q1}, {"q2", map->q2}};
        else
            j["certify_map"] = nullptr;
    }
    if (id.family == Family::Conf || id.family == Family::SigmaCP2 ||
        id.family == Family::SigmaHP2) {
        auto entry = hyp::retract_catalog(id);
        ordered_json r;
        r["q1"] = entry.q1;
        r["q2"] = entry.q2;
        r["excluded_primes"] = entry.excluded_primes;
        r["note"] = entry.note;
        j["retract"] = std::move(r);
    }
    return j;
}

int run_catalog(const CatalogArgs& args, std::ostream& out) {
    Format format = parse_format(args.format);
    if (!args.space.empty()) {
        auto id = spaces::SpaceId::parse(args.space);
        ordered_json j = catalog_entry_json(id);
        if (format == Format::Text) {
            for (const auto& [key, value] : j.items())
                out << key << "=" << value.dump() << "\n";
        } else {
            out << j.dump(2) << "\n";
        }
        return kExitOk;
    }

    ordered_json j;
    j["families"] = ordered_json::array(
        {"CP(n)", "Gr(k,n)", "Milnor(m,n)", "U(n)", "S(n)", "Wedge(n1,n2,...)",
         "Conf(k,n)", "SigmaCP2", "SigmaHP2"});
    ordered_json retracts = ordered_json::array();
    for (const auto& entry : hyp::full_retract_catalog()) {
        ordered_json r;
        r["space"] = entry.space;
        r["census_available"] = entry.census_available;
        if (entry.census_available) {
            r["q1"] = entry.q1;
            r["q2"] = entry.q2;
            r["excluded_primes"] = entry.excluded_primes;
        }
        r["note"] = entry.note;
        retracts.push_back(std::move(r));
    }
    j["retracts"] = std::move(retracts);
    if (format == Format::Text) {
        out << "families:";
        for (const auto& f : j["families"])
            out << ' ' << f.get<std::string>();
        out << "\n";
        for (const auto& r : j["retracts"])
            out << "retract " << r["space"].get<std::string>() << ": "
                << r["note"].get<std::string>() << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int run_verify_oracles(const OracleArgs& args, std::ostream& out) {
    oracles::Scope scope;
    if (args.scope == "numtheory")
        scope = oracles::Scope::Numtheory;
    else if (args.scope == "freelie")
        scope = oracles::Scope::Freelie;
    else if (args.scope == "all")
        scope = oracles::Scope::All;
    else
        throw CLI::ValidationError("--scope", "expected numtheory, freelie or all");

    auto reports = oracles::run_oracles(scope);
    bool all_passed = true;
    if (parse_format(args.format) == Format::Json) {
        ordered_json j = ordered_json::array();
        for (const auto& report : reports) {
            all_passed = all_passed && report.passed;
            j.push_back(ordered_json{{"oracle", report.name},
                                     {"passed", report.passed},
                                     {"comparisons", report.comparisons},
                                     {"detail", report.detail}});
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& report : reports) {
            all_passed = all_passed && report.passed;
            out << (report.passed ? "ok " : "FAIL ") << report.name
                << " comparisons=" << report.comparisons;
            if (!report.detail.empty())
                out << " (" << report.detail << ")";
            out << "\n";
        }
        out << (all_passed ? "all oracles passed\n" : "oracle failures detected\n");
    }
    return all_passed ? kExitOk : kExitBadInput;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact census and certificate computations for torsion growth in "
                 "homotopy groups"};
    app.name("hypcert");
    app.require_subcommand(1);

    WittArgs witt_args;
    auto* witt_cmd = app.add_subcommand("witt", "evaluate the Witt formula W_n(k)");
    witt_cmd->add_option("--n", witt_args.n, "number of generators")
        ->required()
        ->check(CLI::PositiveNumber);
    witt_cmd->add_option("--k", witt_args.k, "weight")->required()->check(CLI::PositiveNumber);
    witt_cmd->add_option("--format", witt_args.format, "json|csv|text");

    HallArgs hall_args;
    auto* hall_cmd = app.add_subcommand("hall", "enumerate basic products of a free "
                                                "graded Lie algebra");
    hall_cmd->add_option("--degrees", hall_args.degrees, "generator degrees, e.g. 1,2")
        ->required();
    hall_cmd->add_option("--max-weight", hall_args.max_weight, "largest weight to enumerate")
        ->required()
        ->check(CLI::PositiveNumber);
    hall_cmd->add_flag("--elements", hall_args.elements, "list bracket strings");
    hall_cmd->add_option("--format", hall_args.format, "json|csv|text");

    StemsArgs stems_args;
    auto* stems_cmd = app.add_subcommand("stems", "stable-stem torsion witness for (p, r)");
    stems_cmd->add_option("--p", stems_args.p, "prime")->required()->check(CLI::PositiveNumber);
    stems_cmd->add_option("--r", stems_args.r, "summand order exponent")
        ->required()
        ->check(CLI::PositiveNumber);
    stems_cmd->add_option("--format", stems_args.format, "json|csv|text");

    CensusArgs census_args;
    auto* census_cmd = app.add_subcommand(
        "wedge-census", "per-degree summand census for a wedge of two spheres");
    census_cmd->add_option("--q1", census_args.q1, "first sphere degree minus one")
        ->check(CLI::PositiveNumber);
    census_cmd->add_option("--q2", census_args.q2, "second sphere degree minus one")
        ->check(CLI::PositiveNumber);
    census_cmd->add_option("--space", census_args.space,
                           "retract-catalog space (Conf(k,n), SigmaCP2, SigmaHP2)");
    census_cmd->add_option("--p", census_args.p, "prime")->required()->check(CLI::PositiveNumber);
    census_cmd->add_option("--r", census_args.r, "summand order exponent")
        ->required()
        ->check(CLI::PositiveNumber);
    census_cmd->add_option("--kmax", census_args.kmax, "largest weight row")
        ->required()
        ->check(CLI::PositiveNumber);
    census_cmd->add_option("--format", census_args.format, "json|csv|text");

    CertifyArgs certify_args;
    auto* certify_cmd = app.add_subcommand(
        "certify", "K-theory detection certificate for the suspension of a catalog space");
    certify_cmd->add_option("--space", certify_args.space, "catalog space id")->required();
    certify_cmd->add_option("--p", certify_args.p, "odd prime")
        ->required()
        ->check(CLI::PositiveNumber);
    certify_cmd->add_option("--kmax", certify_args.kmax, "largest weight row")
        ->required()
        ->check(CLI::PositiveNumber);
    certify_cmd->add_option("--map-matrix", certify_args.map_matrix,
                            "explicit 2-row mod-p matrix, rows ';'-separated");
    certify_cmd->add_option("--input-mode", certify_args.input_mode,
                            "k-theory|cohomology (AHSS collapse)");
    certify_cmd->add_option("--q1", certify_args.q1, "wedge degree override")
        ->check(CLI::PositiveNumber);
    certify_cmd->add_option("--q2", certify_args.q2, "wedge degree override")
        ->check(CLI::PositiveNumber);
    certify_cmd->add_option("--format", certify_args.format, "json|csv|text");

    CatalogArgs catalog_args;
    auto* catalog_cmd = app.add_subcommand("catalog", "catalog space metadata");
    catalog_cmd->add_option("--space", catalog_args.space, "space id to describe");
    catalog_cmd->add_option("--format", catalog_args.format, "json|csv|text");

    OracleArgs oracle_args;
    auto* oracle_cmd =
        app.add_subcommand("verify-oracles", "run the independent brute-force oracles");
    oracle_cmd->add_option("--scope", oracle_args.scope, "numtheory|freelie|all");
    oracle_cmd->add_option("--format", oracle_args.format, "json|csv|text");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        if (witt_cmd->parsed())
            return run_witt(witt_args, out);
        if (hall_cmd->parsed())
            return run_hall(hall_args, out);
        if (stems_cmd->parsed())
            return run_stems(stems_args, out);
        if (census_cmd->parsed())
            return run_census(census_args, out);
        if (certify_cmd->parsed())
            return run_certify(certify_args, out);
        if (catalog_cmd->parsed())
            return run_catalog(catalog_args, out);
        if (oracle_cmd->parsed())
            return run_verify_oracles(oracle_args, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    err << "error: no subcommand\n";
    return kExitBadInput;
}

} // namespace hypcert::cli
