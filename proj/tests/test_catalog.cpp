#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfwit/catalog.hpp"

using namespace hopfwit;

TEST_CASE("the entry list covers the required instances") {
    auto names = catalog_entry_names();
    auto has = [&](const std::string& n) {
        return std::find(names.begin(), names.end(), n) != names.end();
    };
    for (const std::string g : {"kC2", "kC3", "kS3"})
        for (const std::string f : {"Q", "GF2", "GF3", "GF5"}) CHECK(has("hopf/" + g + "/" + f));
    CHECK(has("hopf/H4/Q"));
    CHECK(has("hopf/H4/GF3"));
    CHECK(has("ext/Qsqrt2"));
    CHECK(has("ext/F2u"));
    CHECK(has("entw/trivial-modules/kC2/Q"));
    CHECK(has("entw/trivial-comodules/kC2/Q"));
    CHECK(has("entw/relhopf/kC2/Q"));
    CHECK(has("entw/relhopf/kC2/GF2"));
    CHECK(has("entw/relhopf/H4/Q"));
    CHECK(has("entw/yd/kC2/Q"));
    CHECK(has("entw/yd/H4/Q"));
    CHECK(has("entw/lc/kC2/Q"));
    CHECK(has("entw/lc/H4/Q"));
}

TEST_CASE("the filtered runs are slices of the full run") {
    CatalogReport sub = catalog_run("hopf/H4");
    CHECK(!sub.rows.empty());
    for (const auto& row : sub.rows) CHECK(row.entry.find("hopf/H4") != std::string::npos);
    CHECK(sub.ok());
}

TEST_CASE("the full catalog passes and the report is deterministic") {
    CatalogReport rep1 = catalog_run();
    INFO(rep1.pretty());
    CHECK(rep1.ok());
    CatalogReport rep2 = catalog_run();
    CHECK(rep1.to_json().dump() == rep2.to_json().dump());
    // entries appear in name order
    for (size_t i = 1; i < rep1.rows.size(); ++i)
        CHECK(rep1.rows[i - 1].entry <= rep1.rows[i].entry);
}
