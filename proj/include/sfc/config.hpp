#pragma once

#include <cstddef>
#include <string>

namespace sfc {

struct Config {
  std::size_t monoid_cap = 4096;
  std::size_t powerset_cap = 16;
  // Cap on the size of the monoid generated by the G-operation letter images.
  std::size_t powerset2_cap = 4096;
  std::size_t amt_alphabet_cap = 3;
  std::size_t amt_monoid_cap = 10;
  std::size_t delay_dmax = 8;
  // Safety net for fixpoint loops; the lattices are finite.
  std::size_t round_cap = 100000;
  bool trace = false;

  // Parses `key = value` lines; '#' starts a comment. Throws InputError.
  static Config from_text(const std::string& text);
  static Config from_file(const std::string& path);
  void validate() const;
};

}  // namespace sfc
