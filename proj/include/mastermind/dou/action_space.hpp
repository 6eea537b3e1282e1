#pragma once

#include <vector>

#include "mastermind/dou/combo.hpp"

namespace mastermind::dou {

/// Every distinct combo playable from a 54-card deck, PASS included, in
/// canonical order. Built on first use and cached.
const std::vector<Combo>& enumerate_all_actions();

}  // namespace mastermind::dou
