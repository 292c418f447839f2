#pragma once

#include <map>
#include <string>
#include <vector>

#include "griess/poly.hpp"
#include "griess/virasoro.hpp"

namespace griess {

/* Embedded coefficient tables. Content ships inside the binary and is
 * checksummed on first access; GRIESS_DATA_DIR overrides the location with
 * on-disk files (useful for experiments, bypasses the checksum). */

/* appendix_a: A <m> [parts] <poly> */
const std::map<unsigned, std::map<Partition, Poly>>& appendix_a_table();

struct SymClass {
    unsigned degree = 0;
    std::string id;                        /* "0".."8" or quin ids like "01423" */
    std::vector<std::string> members;      /* product strings, e.g. "(0|1)(2|w)" */
};

struct AppendixB {
    std::vector<SymClass> sym;                                   /* all degrees 1..5 */
    std::map<unsigned, std::map<std::string, Poly>> f;           /* degree -> id -> poly */
    std::map<unsigned, std::map<unsigned, Poly>> e;              /* degree -> j -> poly  */
};

const AppendixB& appendix_b_table();

/* Raw text access (already checksum-verified). */
const std::string& appendix_a_text();
const std::string& appendix_b_text();

} // namespace griess
