#pragma once

#include <string>

#include "packcert/shell/scene.hpp"
#include "properties.hpp"

namespace packcert::testing {

inline shell::BuiltScene bundled_scene(const std::string& file) {
  return shell::build_scene(shell::load_scene(scene_dir() + "/" + file));
}

inline exactnum::Rational q(const char* text) { return exactnum::parse_rational(text); }

}  // namespace packcert::testing
