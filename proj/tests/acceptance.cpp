// Acceptance suite: runs every criterion and prints one line per result.
#include <cstdio>

#include "schubertkit/verify.hpp"

int main() {
    auto results = schubertkit::run_acceptance(schubertkit::criteria_for_suite("all"), 5);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.pass ? "" : " -- ",
                    r.pass ? "" : r.detail.c_str());
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
