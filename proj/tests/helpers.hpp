#pragma once

#include <string>

#include "posetkit/poset.hpp"

namespace fixtures {

inline posetkit::Poset n_poset() {
	return posetkit::parse_poset("elements: a b c d\na b\nc b\nc d\n");
}
inline posetkit::Poset fork3() {
	return posetkit::parse_poset("elements: x y z\nx y\n");
}
inline posetkit::Poset diamond() {
	return posetkit::parse_poset("elements: 0 x y 1\n0 x\n0 y\nx 1\ny 1\n");
}
inline posetkit::Poset chain_abc() {
	return posetkit::parse_poset("elements: a b c\na b\nb c\n");
}

} // namespace fixtures
