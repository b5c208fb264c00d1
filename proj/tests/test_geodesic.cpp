#include <doctest.h>

#include "ancq/geodesic.hpp"

using namespace ancq;

TEST_CASE("placeholder") { CHECK(true); }
