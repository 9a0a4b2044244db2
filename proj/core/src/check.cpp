#include "lenslab/check.hpp"

#include <stdexcept>

namespace lenslab {

std::optional<std::string> lens_validation_error(const FiniteLens& lens) {
  if (lens.s_size < 1) return "s_size must be >= 1";
  if (lens.v_size < 1) return "v_size must be >= 1";
  const std::size_t n = static_cast<std::size_t>(lens.s_size);
  const std::size_t m = static_cast<std::size_t>(lens.v_size);
  if (lens.get) {
    if (lens.get->size() != n) {
      return "get must have s_size=" + std::to_string(lens.s_size) +
             " entries, got " + std::to_string(lens.get->size());
    }
    for (std::size_t s = 0; s < n; ++s) {
      int v = (*lens.get)[s];
      if (v < 0 || v >= lens.v_size) {
        return "get[" + std::to_string(s) + "] = " + std::to_string(v) +
               " out of range [0, " + std::to_string(lens.v_size) + ")";
      }
    }
  }
  if (lens.put.size() != n * m) {
    return "put must have s_size*v_size=" + std::to_string(n * m) +
           " entries, got " + std::to_string(lens.put.size());
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t v = 0; v < m; ++v) {
      int t = lens.put[s * m + v];
      if (t < 0 || t >= lens.s_size) {
        return "put[" + std::to_string(s) + "][" + std::to_string(v) + "] = " +
               std::to_string(t) + " out of range [0, " +
               std::to_string(lens.s_size) + ")";
      }
    }
  }
  return std::nullopt;
}

void require_valid(const FiniteLens& lens) {
  if (auto err = lens_validation_error(lens)) {
    throw std::invalid_argument("invalid lens: " + *err);
  }
}

FiniteLens without_get(const FiniteLens& lens) {
  FiniteLens out = lens;
  out.get.reset();
  return out;
}

namespace detail {

namespace {

ViolationWitness make_witness(Law law, Binding b, int lhs, int rhs) {
  ViolationWitness w;
  w.law = law;
  w.binding = b;
  w.lhs = lhs;
  w.rhs = rhs;
  return w;
}

// Each checker enumerates bindings in the canonical variable order
// (s, s′, v, v′) and stops at the first violation.

CheckResult check_sg(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    for (int sp = 0; sp < L.s_size; ++sp) {
      int lhs = L.put_at(s, L.get_at(sp));
      if (lhs != sp) {
        return make_witness(Law::SG, {s, sp, {}, {}}, lhs, sp);
      }
    }
  }
  return std::nullopt;
}

CheckResult check_gp(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    int lhs = L.put_at(s, L.get_at(s));
    if (lhs != s) {
      return make_witness(Law::GP, {s, {}, {}, {}}, lhs, s);
    }
  }
  return std::nullopt;
}

CheckResult check_pg(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    for (int v = 0; v < L.v_size; ++v) {
      int lhs = L.get_at(L.put_at(s, v));
      if (lhs != v) {
        return make_witness(Law::PG, {s, {}, v, {}}, lhs, v);
      }
    }
  }
  return std::nullopt;
}

CheckResult check_pp(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    for (int v = 0; v < L.v_size; ++v) {
      for (int vp = 0; vp < L.v_size; ++vp) {
        int lhs = L.put_at(L.put_at(s, v), vp);
        int rhs = L.put_at(s, vp);
        if (lhs != rhs) {
          return make_witness(Law::PP, {s, {}, v, vp}, lhs, rhs);
        }
      }
    }
  }
  return std::nullopt;
}

CheckResult check_wp(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    for (int v = 0; v < L.v_size; ++v) {
      int rhs = L.put_at(s, v);
      int lhs = L.put_at(s, L.get_at(rhs));
      if (lhs != rhs) {
        return make_witness(Law::WP, {s, {}, v, {}}, lhs, rhs);
      }
    }
  }
  return std::nullopt;
}

CheckResult check_ud(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    for (int v = 0; v < L.v_size; ++v) {
      int lhs = L.put_at(L.put_at(s, v), L.get_at(s));
      if (lhs != s) {
        return make_witness(Law::UD, {s, {}, v, {}}, lhs, s);
      }
    }
  }
  return std::nullopt;
}

CheckResult check_pt(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    for (int v = 0; v < L.v_size; ++v) {
      int rhs = L.put_at(s, v);
      int lhs = L.put_at(rhs, v);
      if (lhs != rhs) {
        return make_witness(Law::PT, {s, {}, v, {}}, lhs, rhs);
      }
    }
  }
  return std::nullopt;
}

CheckResult check_ss(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    bool stable = false;
    for (int v = 0; v < L.v_size && !stable; ++v) {
      stable = L.put_at(s, v) == s;
    }
    if (!stable) {
      return make_witness(Law::SS, {s, {}, {}, {}}, s, s);
    }
  }
  return std::nullopt;
}

CheckResult check_ps(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    bool hit = false;
    for (int sp = 0; sp < L.s_size && !hit; ++sp) {
      for (int v = 0; v < L.v_size && !hit; ++v) {
        hit = L.put_at(sp, v) == s;
      }
    }
    if (!hit) {
      return make_witness(Law::PS, {s, {}, {}, {}}, s, s);
    }
  }
  return std::nullopt;
}

CheckResult check_vd(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    for (int sp = 0; sp < L.s_size; ++sp) {
      for (int v = 0; v < L.v_size; ++v) {
        for (int vp = 0; vp < L.v_size; ++vp) {
          if (v != vp && L.put_at(s, v) == L.put_at(sp, vp)) {
            return make_witness(Law::VD, {s, sp, v, vp}, v, vp);
          }
        }
      }
    }
  }
  return std::nullopt;
}

CheckResult check_pi(const FiniteLens& L) {
  for (int s = 0; s < L.s_size; ++s) {
    for (int v = 0; v < L.v_size; ++v) {
      for (int vp = 0; vp < L.v_size; ++vp) {
        if (v != vp && L.put_at(s, v) == L.put_at(s, vp)) {
          return make_witness(Law::PI, {s, {}, v, vp}, v, vp);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CheckResult check_law_unchecked(const FiniteLens& lens, Law law) {
  if (!lens.get && !law_info(law).put_only) {
    throw CarrierMismatch(std::string(law_name(law)) +
                          " mentions get, but the lens has no get component");
  }
  switch (law) {
    case Law::SG: return check_sg(lens);
    case Law::GP: return check_gp(lens);
    case Law::PG: return check_pg(lens);
    case Law::PP: return check_pp(lens);
    case Law::WP: return check_wp(lens);
    case Law::UD: return check_ud(lens);
    case Law::PT: return check_pt(lens);
    case Law::SS: return check_ss(lens);
    case Law::PS: return check_ps(lens);
    case Law::VD: return check_vd(lens);
    case Law::PI: return check_pi(lens);
  }
  throw std::logic_error("unreachable law");
}

}  // namespace detail

CheckResult check_law(const FiniteLens& lens, Law law) {
  require_valid(lens);
  return detail::check_law_unchecked(lens, law);
}

LawSet law_profile(const FiniteLens& lens) {
  require_valid(lens);
  LawSet profile;
  for (Law l : all_laws()) {
    if (!lens.get && !law_info(l).put_only) continue;
    if (!detail::check_law_unchecked(lens, l)) profile.insert(l);
  }
  return profile;
}

namespace {

// A witness whose binding misses a variable its law quantifies cannot replay.
struct MissingVariable {};

int bound(const std::optional<int>& x, const char* name, int limit) {
  if (!x) throw MissingVariable{};
  if (*x < 0 || *x >= limit) {
    throw CarrierMismatch(std::string("witness binding ") + name + "=" +
                          std::to_string(*x) + " outside carrier [0, " +
                          std::to_string(limit) + ")");
  }
  return *x;
}

}  // namespace

bool verify_witness(const FiniteLens& lens, const ViolationWitness& w) {
  require_valid(lens);
  const Binding& b = w.binding;
  if (!lens.get && !law_info(w.law).put_only) {
    throw CarrierMismatch(std::string(law_name(w.law)) +
                          " mentions get, but the lens has no get component");
  }
  const int n = lens.s_size;
  const int m = lens.v_size;
  try {
    switch (w.law) {
      case Law::SG: {
        int s = bound(b.s, "s", n), sp = bound(b.s_prime, "s'", n);
        int lhs = lens.put_at(s, lens.get_at(sp));
        return lhs != sp && w.lhs == lhs && w.rhs == sp;
      }
      case Law::GP: {
        int s = bound(b.s, "s", n);
        int lhs = lens.put_at(s, lens.get_at(s));
        return lhs != s && w.lhs == lhs && w.rhs == s;
      }
      case Law::PG: {
        int s = bound(b.s, "s", n), v = bound(b.v, "v", m);
        int lhs = lens.get_at(lens.put_at(s, v));
        return lhs != v && w.lhs == lhs && w.rhs == v;
      }
      case Law::PP: {
        int s = bound(b.s, "s", n), v = bound(b.v, "v", m), vp = bound(b.v_prime, "v'", m);
        int lhs = lens.put_at(lens.put_at(s, v), vp);
        int rhs = lens.put_at(s, vp);
        return lhs != rhs && w.lhs == lhs && w.rhs == rhs;
      }
      case Law::WP: {
        int s = bound(b.s, "s", n), v = bound(b.v, "v", m);
        int rhs = lens.put_at(s, v);
        int lhs = lens.put_at(s, lens.get_at(rhs));
        return lhs != rhs && w.lhs == lhs && w.rhs == rhs;
      }
      case Law::UD: {
        int s = bound(b.s, "s", n), v = bound(b.v, "v", m);
        int lhs = lens.put_at(lens.put_at(s, v), lens.get_at(s));
        return lhs != s && w.lhs == lhs && w.rhs == s;
      }
      case Law::PT: {
        int s = bound(b.s, "s", n), v = bound(b.v, "v", m);
        int rhs = lens.put_at(s, v);
        int lhs = lens.put_at(rhs, v);
        return lhs != rhs && w.lhs == lhs && w.rhs == rhs;
      }
      case Law::SS: {
        int s = bound(b.s, "s", n);
        for (int v = 0; v < m; ++v) {
          if (lens.put_at(s, v) == s) return false;
        }
        return true;
      }
      case Law::PS: {
        int s = bound(b.s, "s", n);
        for (int sp = 0; sp < n; ++sp) {
          for (int v = 0; v < m; ++v) {
            if (lens.put_at(sp, v) == s) return false;
          }
        }
        return true;
      }
      case Law::VD: {
        int s = bound(b.s, "s", n), sp = bound(b.s_prime, "s'", n);
        int v = bound(b.v, "v", m), vp = bound(b.v_prime, "v'", m);
        return v != vp && lens.put_at(s, v) == lens.put_at(sp, vp) &&
               w.lhs == v && w.rhs == vp;
      }
      case Law::PI: {
        int s = bound(b.s, "s", n), v = bound(b.v, "v", m), vp = bound(b.v_prime, "v'", m);
        return v != vp && lens.put_at(s, v) == lens.put_at(s, vp) &&
               w.lhs == v && w.rhs == vp;
      }
    }
  } catch (const MissingVariable&) {
    return false;
  }
  return false;
}

}  // namespace lenslab
