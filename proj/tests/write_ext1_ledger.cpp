// Regenerates data/ext1_table_deviations.txt on stdout.
#include <iostream>

#include "ext1_ledger.hpp"

int main() { std::cout << sheafdist::testing::ext1_deviation_ledger(); }
