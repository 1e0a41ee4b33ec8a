#pragma once

#include <string>

namespace coercheck {

enum class Verdict { Coercive, NotCoercive, Borderline, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Coercive: return "Coercive";
    case Verdict::NotCoercive: return "NotCoercive";
    case Verdict::Borderline: return "Borderline";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace coercheck
