#include <doctest.h>

#include "ancq/weyl.hpp"

using namespace ancq;

TEST_CASE("placeholder") { CHECK(true); }
