#pragma once

#include <array>
#include <utility>
#include <vector>

namespace klein::detail {

struct RawEvaluation {
    const char* name;
    const char* a;
    const char* b;
    const char* c;
    std::vector<std::pair<const char*, const char*>> factors;
    const char* rational;
};

struct RawEntry {
    int type_id;
    const char* curve;  // q(x) of xi^2 = q(x); nullptr for the projective line
    const char* phi;
    const char* phi_constant;
    std::vector<std::pair<const char*, int>> phi_factors;
    std::array<RawEvaluation, 4> evaluations;
    const char* anchor_x;
    const char* anchor_xi;
    std::vector<const char*> z_anchors;
    const char* aut_x;
    const char* aut_xi;
};

const std::vector<RawEntry>& raw_database();

}  // namespace klein::detail
