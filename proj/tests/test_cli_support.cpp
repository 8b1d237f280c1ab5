#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "mzvlab/config.hpp"
#include "mzvlab/report.hpp"

using namespace mzvlab;

TEST_CASE("config file parsing and validation") {
    std::string path = "test_config.cfg";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "digits = 60\n";
        out << "m_max=4\n";
        out << "weight_max = 7\n";
        out << "p_max = 200\n";
        out << "cache_path = /tmp/cache.txt\n";
        out << "threads = 2\n";
    }
    Config cfg = Config::from_file(path);
    CHECK(cfg.digits == 60);
    CHECK(cfg.m_max == 4);
    CHECK(cfg.weight_max == 7);
    CHECK(cfg.p_max == 200);
    CHECK(cfg.cache_path == "/tmp/cache.txt");
    CHECK(cfg.threads == 2);
    CHECK(cfg.effective_guard() == 17);
    cfg.validate();
    std::remove(path.c_str());

    Config bad;
    bad.digits = 10;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    Config badguard;
    badguard.guard = 5;
    CHECK_THROWS_AS(badguard.validate(), std::invalid_argument);

    {
        std::ofstream out(path);
        out << "nonsense = 1\n";
    }
    CHECK_THROWS_AS(Config::from_file(path), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("cache path from the environment") {
    setenv("MZV_CACHE_PATH", "/tmp/env_cache.txt", 1);
    Config cfg;
    cfg.apply_env();
    CHECK(cfg.cache_path == "/tmp/env_cache.txt");
    cfg.cache_path = "explicit.txt";
    cfg.apply_env();
    CHECK(cfg.cache_path == "explicit.txt");
    unsetenv("MZV_CACHE_PATH");
}

TEST_CASE("report bodies are deterministic and timing-free by default") {
    Report r;
    r.title = "demo";
    r.provenance["digits"] = "50";
    CheckRecord a{"ohno", "k=1,2 m=0", "0", true, false, false, "", 12.5};
    CheckRecord b{"conj4.3", "s=2 coeff=1", "3.1e-44", true, true, false, "", 99.0};
    CheckRecord c{"conj4.2", "s=3 n=0", "0", true, true, true, "boundary read as O(s)", 1.0};
    r.add(a);
    r.add(b);
    r.add(c);
    std::string t1 = r.text();
    CheckRecord a2 = a;
    a2.elapsed_ms = 9999.0;  // timings must not leak into the body
    Report r2;
    r2.title = "demo";
    r2.provenance["digits"] = "50";
    r2.add(a2);
    r2.add(b);
    r2.add(c);
    CHECK(t1 == r2.text());
    CHECK(t1.find("ohno") != std::string::npos);
    CHECK(t1.find("[conjectural]") != std::string::npos);
    CHECK(t1.find("[interpreted-boundary]") != std::string::npos);
    CHECK(t1.find("ms") == std::string::npos);
    CHECK(r.failed_proved() == 0);

    CheckRecord fail{"thm1.8", "s=2 t=3 m=0", "1.0e-2", false, false, false, "", 0.0};
    r.add(fail);
    CHECK(r.failed_proved() == 1);
    CHECK(r.text().find("FAIL") != std::string::npos);
}
