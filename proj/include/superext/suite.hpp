#pragma once

#include "superext/theorem.hpp"

#include <string>
#include <vector>

namespace superext {

enum class SuiteScale { small, full };

SuiteScale parse_scale(const std::string& name);

// h1aC, vanishing, kunneth, irreducible_product, ext1_evaluation, h1_evaluation, thm_main, blocks.
const std::vector<std::string>& suite_names();

// Runs one named suite, or every suite for "all".
std::vector<VerifyReport> run_suite(const std::string& name, SuiteScale scale, std::size_t jobs = 1);

}  // namespace superext
