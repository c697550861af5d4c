#pragma once

#include <catch2/catch_amalgamated.hpp>
#include <string>

#include "tropic/errors.hpp"

inline auto ErrorKindIs(tropic::ErrorKind k) {
    return Catch::Matchers::Predicate<tropic::Error>(
        [k](const tropic::Error& e) { return e.kind() == k; },
        std::string("error kind == ") + tropic::error_kind_name(k));
}
