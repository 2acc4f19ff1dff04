#include <doctest.h>

#include <sstream>

#include "lgf/table_io.hpp"

using namespace lgf;

TEST_CASE("format_double round-trips awkward values") {
    for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0, 6.02e23}) {
        const std::string s = format_double(x);
        CHECK(std::stod(s) == x);
    }
}

namespace {

TableFile sample() {
    TableFile t;
    t.metadata["alpha1"] = "0.5";
    t.metadata["c2"] = "0.09";
    t.metadata["tool_version"] = "test";
    t.entries = {{0, 0, 0.607280122403887}, {1, 0, 0.24106553106024706}, {0, 1, 1.0 / 3.0}};
    return t;
}

}  // namespace

TEST_CASE("CSV round-trip is byte-identical") {
    const TableFile t = sample();
    std::ostringstream first;
    write_table_csv(first, t);
    std::istringstream in(first.str());
    const TableFile back = read_table_csv(in);
    std::ostringstream second;
    write_table_csv(second, back);
    CHECK(second.str() == first.str());
    CHECK(back.metadata == t.metadata);
    CHECK(back.entries == t.entries);
}

TEST_CASE("JSON round-trip preserves every value exactly") {
    const TableFile t = sample();
    std::ostringstream first;
    write_table_json(first, t);
    std::istringstream in(first.str());
    const TableFile back = read_table_json(in);
    CHECK(back.metadata == t.metadata);
    CHECK(back.entries == t.entries);
}

TEST_CASE("malformed inputs are rejected") {
    std::istringstream no_header("0,0,1.5\n");
    CHECK_THROWS(read_table_csv(no_header));
    std::istringstream bad_meta("# novalue\nn,m,value\n");
    CHECK_THROWS(read_table_csv(bad_meta));
    std::istringstream bad_num("n,m,value\n0,0,abc\n");
    CHECK_THROWS(read_table_csv(bad_num));
}
