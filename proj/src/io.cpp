#include "hypcert/io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hypcert::io {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

ordered_json rows_to_json(const std::vector<hyp::CensusRow>& rows) {
    ordered_json out = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json degrees = ordered_json::object();
        for (const auto& [degree, count] : row.counts)
            degrees[std::to_string(degree)] = count.str();
        out.push_back(ordered_json{{"k", row.k},
                                   {"witt", row.witt_total.str()},
                                   {"degrees", std::move(degrees)}});
    }
    return out;
}

std::vector<hyp::CensusRow> rows_from_json(const ordered_json& j) {
    std::vector<hyp::CensusRow> rows;
    for (const auto& row_json : j) {
        hyp::CensusRow row;
        row.k = row_json.at("k").get<long long>();
        row.witt_total = BigInt(row_json.at("witt").get<std::string>());
        for (const auto& [key, value] : row_json.at("degrees").items())
            row.counts[std::stoll(key)] = BigInt(value.get<std::string>());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string csv_rows(const std::vector<hyp::CensusRow>& rows) {
    std::ostringstream os;
    os << "k,N,count\n";
    for (const auto& row : rows)
        for (const auto& [degree, count] : row.counts)
            os << row.k << ',' << degree << ',' << count.str() << '\n';
    return os.str();
}

} // namespace

std::string to_json(const hyp::WedgeCensus& census) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "wedge";
    j["space"] = census.space;
    j["p"] = census.p;
    j["r"] = census.r;
    j["q1"] = census.q1;
    j["q2"] = census.q2;
    j["j"] = census.j();
    j["k0"] = census.k0;
    j["a"] = census.a;
    j["b"] = census.b;
    j["liminf_ln2_coeff"] = rational_str(census.liminf_ln2_coeff());
    j["rows"] = rows_to_json(census.rows);
    j["oracles_checked"] = census.oracles_checked;
    return j.dump(2) + "\n";
}

std::string to_json(const hyp::PHypCertificate& cert) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "k-detection";
    j["space"] = cert.space;
    j["p"] = cert.p;
    j["q1"] = cert.q1;
    j["q2"] = cert.q2;
    j["i_lambda"] = cert.i_lambda;
    j["c"] = cert.c;
    j["k0"] = cert.k0;
    j["a"] = cert.a;
    j["b"] = cert.b;
    j["liminf_ln2_coeff"] = rational_str(cert.liminf_ln2_coeff());
    j["rows"] = rows_to_json(cert.rows);
    j["oracles_checked"] = cert.oracles_checked;
    return j.dump(2) + "\n";
}

std::string failure_json(const std::string& space, long long p, const std::string& reason) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "hypothesis-failure";
    j["space"] = space;
    j["p"] = p;
    j["reason"] = reason;
    return j.dump(2) + "\n";
}

hyp::WedgeCensus census_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("kind").get<std::string>() != "wedge")
        throw std::invalid_argument("census_from_json: not a wedge census document");
    hyp::WedgeCensus census;
    census.space = j.at("space").get<std::string>();
    census.p = j.at("p").get<long long>();
    census.r = j.at("r").get<long long>();
    census.q1 = j.at("q1").get<long long>();
    census.q2 = j.at("q2").get<long long>();
    census.witness = stems::stable_summand_stem(census.p, census.r);
    if (census.witness.j != j.at("j").get<long long>())
        throw std::invalid_argument("census_from_json: stem degree mismatch");
    census.k0 = j.at("k0").get<long long>();
    census.a = j.at("a").get<long long>();
    census.b = j.at("b").get<long long>();
    census.rows = rows_from_json(j.at("rows"));
    census.oracles_checked = j.at("oracles_checked").get<std::vector<std::string>>();
    return census;
}

hyp::PHypCertificate certificate_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("kind").get<std::string>() != "k-detection")
        throw std::invalid_argument("certificate_from_json: not a certificate document");
    hyp::PHypCertificate cert;
    cert.space = j.at("space").get<std::string>();
    cert.p = j.at("p").get<long long>();
    cert.q1 = j.at("q1").get<long long>();
    cert.q2 = j.at("q2").get<long long>();
    cert.i_lambda = j.at("i_lambda").get<long long>();
    cert.c = j.at("c").get<long long>();
    cert.k0 = j.at("k0").get<long long>();
    cert.a = j.at("a").get<long long>();
    cert.b = j.at("b").get<long long>();
    cert.rows = rows_from_json(j.at("rows"));
    cert.oracles_checked = j.at("oracles_checked").get<std::vector<std::string>>();
    return cert;
}

std::string to_csv(const hyp::WedgeCensus& census) { return csv_rows(census.rows); }

std::string to_csv(const hyp::PHypCertificate& cert) { return csv_rows(cert.rows); }

std::string to_text(const hyp::WedgeCensus& census) {
    std::ostringstream os;
    os << "wedge census for " << census.space << ": p=" << census.p << " r=" << census.r
       << " j=" << census.j() << " (" << stems::to_string(census.witness.witness_case)
       << ")\n"
       << "k0=" << census.k0 << " a=" << census.a << " b=" << census.b
       << " liminf>=ln(2)*" << rational_str(census.liminf_ln2_coeff()) << "\n";
    for (const auto& row : census.rows) {
        os << "k=" << row.k << " witt=" << row.witt_total.str() << " degrees:";
        for (const auto& [degree, count] : row.counts)
            os << ' ' << degree << ':' << count.str();
        os << '\n';
    }
    return os.str();
}

std::string to_text(const hyp::PHypCertificate& cert) {
    std::ostringstream os;
    os << "p-hyperbolicity certificate for Sigma " << cert.space << " (and all further "
          "suspensions): p="
       << cert.p << "\n"
       << "q1=" << cert.q1 << " q2=" << cert.q2 << " i_lambda=" << cert.i_lambda
       << " c=" << cert.c << " k0=" << cert.k0 << " a=" << cert.a << " b=" << cert.b
       << " liminf>=ln(2)*" << rational_str(cert.liminf_ln2_coeff()) << "\n";
    for (const auto& row : cert.rows) {
        os << "k=" << row.k << " witt=" << row.witt_total.str() << " degrees:";
        for (const auto& [degree, count] : row.counts)
            os << ' ' << degree << ':' << count.str();
        os << '\n';
    }
    return os.str();
}

} // namespace hypcert::io
