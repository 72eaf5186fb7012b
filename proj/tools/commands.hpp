// CLI command implementations. Exit codes: 0 success/verified/found,
// 1 usage/parse/parameter error, 2 verification or construction failure,
// 3 exhaustive search completed without a hit.
#pragma once

#include <optional>
#include <string>

namespace edfforge::cli {

struct ConstructRequest {
    std::string family;
    int m = 0;
    int k = 0;
    int p = 0;
    int q = 0;
    int l = 1;
    std::int64_t prime = 0;
    std::optional<std::int64_t> primitive;
    bool oriented = false;
    bool clockwise = false;
    std::string out;
};

int cmd_construct(const ConstructRequest& req);

int cmd_verify(const std::string& in, const std::string& mode, std::optional<int> c,
               const std::string& valuation_class);

struct SearchRequest {
    std::string generator;   // path:M | cycle:M | ucycle:M | kpq:P,Q | star:M,L | p1p1
    std::string in;          // witness file as graph source (alternative to generator)
    int trees = 0;           // when > 0: sweep all trees of this order
    std::string valuation_class = "beta";
    int max_vertices = 12;
};

int cmd_search(const SearchRequest& req);

int cmd_export_dot(const std::string& in, const std::string& out);

}  // namespace edfforge::cli
