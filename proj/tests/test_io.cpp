#include <sstream>
#include <string>

#include "doctest.h"
#include "dunkl/io.hpp"

using namespace dunkl;

TEST_CASE("envelope layout") {
    const json j = envelope("regions", {{"set", "J1"}, {"sigma", "0.5"}}, json{{"member", true}});
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "regions");
    CHECK(j["params"]["sigma"] == "0.5");
    CHECK(j["result"]["member"] == true);
    CHECK(dump_json(j).back() == '\n');
}

TEST_CASE("serialization is deterministic") {
    const CoeffMatrix m = t_matrix_closed(TParams(1.0, 0.5, 1.0), 12);
    CHECK(dump_json(to_json(m)) == dump_json(to_json(t_matrix_closed(TParams(1.0, 0.5, 1.0), 12))));
    OperatorSpec spec;
    spec.sigma = 1.0;
    spec.xi = 1.0;
    spec.order = 16;
    CHECK(dump_json(to_json(ritz_solve(spec))) == dump_json(to_json(ritz_solve(spec))));
}

TEST_CASE("non-finite numbers become strings") {
    FitReport r;
    r.fitted_value = std::numeric_limits<double>::infinity();
    r.residual = std::numeric_limits<double>::quiet_NaN();
    const json j = to_json(r);
    CHECK(j["value"] == "inf");
    CHECK(j["residual"] == "nan");
}

TEST_CASE("coefficient CSV") {
    const CoeffMatrix m = t_matrix_closed(TParams(1.0, 0.5, 1.0), 64);
    const std::string csv = coeff_csv(m, {{"sigma", "1"}});
    std::istringstream in(csv);
    std::string line;
    int comments = 0, rows = 0;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) ++comments;
        else if (line == "k,l,value") header = true;
        else ++rows;
    }
    CHECK(header);
    CHECK(comments >= 2);
    CHECK(rows == 64 * 64);
    CHECK(csv.rfind("# schema=1\n", 0) == 0);
}

TEST_CASE("format_double round trips") {
    for (double x : {0.1, 1.0 / 3.0, 6.02e23, -2.5e-300}) CHECK(std::stod(format_double(x)) == x);
}
