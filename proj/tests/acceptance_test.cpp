// Acceptance gate: runs every criterion and prints one pass/fail line each.
#include <cstdio>

#include "acceptance.hpp"

int main() {
    smg::AcceptanceReport rep = smg::run_acceptance("all");
    std::fputs(rep.format().c_str(), stdout);
    return rep.all_passed() ? 0 : 1;
}
