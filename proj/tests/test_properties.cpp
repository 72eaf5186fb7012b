#include <doctest.h>

#include "property_suites.hpp"

using namespace edfforge::test;

TEST_CASE("property suites (200 generated cases each)") {
    for (const NamedSuite& suite : all_property_suites()) {
        CAPTURE(suite.name);
        PropResult res = suite.run(200);
        INFO(res.message);
        CHECK(res.ok);
        CHECK(res.cases >= 200);
    }
}
