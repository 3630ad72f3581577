#include "amalgam/config.hpp"

#include <cstdlib>
#include <string>

#include "amalgam/exactalg.hpp"

namespace amg {

namespace {

template <typename T>
void overlay(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(raw, &used);
    if (used != std::string(raw).size() || parsed == 0) throw InputError("");
    value = static_cast<T>(parsed);
  } catch (const std::exception&) {
    throw InputError(std::string("environment variable ") + name + " must be a positive integer, got '" + raw + "'");
  }
}

}  // namespace

Limits Limits::current() {
  Limits l;
  overlay("AMG_MAX_GROUP_ORDER", l.max_group_order);
  overlay("AMG_MAX_WORD_DEGREE", l.max_word_degree);
  overlay("AMG_MAX_TRUNCATION", l.max_truncation);
  overlay("AMG_MAX_UNKNOWNS", l.max_unknowns);
  overlay("AMG_MAX_TENSOR_DIM", l.max_tensor_dim);
  return l;
}

}  // namespace amg
