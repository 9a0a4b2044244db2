#include "lenslab/gallery.hpp"

#include <type_traits>

namespace lenslab {

namespace {

Int pow2_abs(const Int& s) {
  Int magnitude = boost::multiprecision::abs(s);
  return Int(1) << magnitude.convert_to<unsigned long>();
}

/// Window values outward from zero: 0, 1, -1, ..., window, -window.
std::vector<Int> window_sources(int window) {
  std::vector<Int> values;
  values.reserve(2 * static_cast<std::size_t>(window) + 1);
  values.emplace_back(0);
  for (int k = 1; k <= window; ++k) {
    values.emplace_back(k);
    values.emplace_back(-k);
  }
  return values;
}

template <class ViewT>
std::vector<ViewT> window_views(int window) {
  if constexpr (std::is_same_v<ViewT, Int>) {
    return window_sources(window);
  } else {
    std::vector<Int> base = window_sources(window);
    std::vector<ViewT> views;
    views.reserve(base.size() * base.size());
    for (const Int& a : base) {
      for (const Int& b : base) views.emplace_back(a, b);
    }
    return views;
  }
}

template <class ViewT>
class WindowChecker {
 public:
  WindowChecker(std::function<ViewT(const Int&)> get,
                std::function<Int(const Int&, const ViewT&)> put, int window)
      : get_(std::move(get)),
        put_(std::move(put)),
        window_(window),
        sources_(window_sources(window)),
        views_(window_views<ViewT>(window)) {
    grid_.resize(sources_.size());
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      grid_[i].reserve(views_.size());
      for (const ViewT& v : views_) grid_[i].push_back(put_(sources_[i], v));
    }
    if (get_) {
      got_.reserve(sources_.size());
      for (const Int& s : sources_) got_.push_back(get_(s));
    }
  }

  std::optional<GalleryWitness> check(Law law) const {
    switch (law) {
      case Law::SG: return check_sg();
      case Law::GP: return check_gp();
      case Law::PG: return check_pg();
      case Law::PP: return check_pp();
      case Law::WP: return check_wp();
      case Law::UD: return check_ud();
      case Law::PT: return check_pt();
      case Law::SS: return check_ss();
      case Law::PS: return check_ps();
      case Law::VD: return check_vd();
      case Law::PI: return check_pi();
    }
    throw std::logic_error("unknown law");
  }

  bool stabilizer_free(const Int& s) const {
    for (const ViewT& v : views_) {
      if (put_(s, v) == s) return false;
    }
    return true;
  }

  bool preimage_free(const Int& s) const {
    for (const Int& source : sources_) {
      for (const ViewT& v : views_) {
        if (put_(source, v) == s) return false;
      }
    }
    return true;
  }

 private:
  GalleryWitness base(Law law) const {
    GalleryWitness witness;
    witness.law = law;
    witness.window = window_;
    return witness;
  }

  const ViewT& get_at(std::size_t i) const { return got_[i]; }

  std::optional<GalleryWitness> check_sg() const {
    require_get();
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t j = 0; j < sources_.size(); ++j) {
        Int lhs = put_(sources_[i], got_[j]);
        if (lhs != sources_[j]) {
          GalleryWitness w = base(Law::SG);
          w.s = sources_[i];
          w.s_prime = sources_[j];
          w.lhs = GalleryView(lhs);
          w.rhs = GalleryView(sources_[j]);
          return w;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<GalleryWitness> check_gp() const {
    require_get();
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      Int lhs = put_(sources_[i], got_[i]);
      if (lhs != sources_[i]) {
        GalleryWitness w = base(Law::GP);
        w.s = sources_[i];
        w.lhs = GalleryView(lhs);
        w.rhs = GalleryView(sources_[i]);
        return w;
      }
    }
    return std::nullopt;
  }

  std::optional<GalleryWitness> check_pg() const {
    require_get();
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t vi = 0; vi < views_.size(); ++vi) {
        ViewT lhs = get_(grid_[i][vi]);
        if (lhs != views_[vi]) {
          GalleryWitness w = base(Law::PG);
          w.s = sources_[i];
          w.v = GalleryView(views_[vi]);
          w.lhs = GalleryView(lhs);
          w.rhs = GalleryView(views_[vi]);
          return w;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<GalleryWitness> check_pp() const {
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t vi = 0; vi < views_.size(); ++vi) {
        for (std::size_t vj = 0; vj < views_.size(); ++vj) {
          Int lhs = put_(grid_[i][vi], views_[vj]);
          if (lhs != grid_[i][vj]) {
            GalleryWitness w = base(Law::PP);
            w.s = sources_[i];
            w.v = GalleryView(views_[vi]);
            w.v_prime = GalleryView(views_[vj]);
            w.lhs = GalleryView(lhs);
            w.rhs = GalleryView(grid_[i][vj]);
            return w;
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<GalleryWitness> check_wp() const {
    require_get();
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t vi = 0; vi < views_.size(); ++vi) {
        Int lhs = put_(sources_[i], get_(grid_[i][vi]));
        if (lhs != grid_[i][vi]) {
          GalleryWitness w = base(Law::WP);
          w.s = sources_[i];
          w.v = GalleryView(views_[vi]);
          w.lhs = GalleryView(lhs);
          w.rhs = GalleryView(grid_[i][vi]);
          return w;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<GalleryWitness> check_ud() const {
    require_get();
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t vi = 0; vi < views_.size(); ++vi) {
        Int lhs = put_(grid_[i][vi], got_[i]);
        if (lhs != sources_[i]) {
          GalleryWitness w = base(Law::UD);
          w.s = sources_[i];
          w.v = GalleryView(views_[vi]);
          w.lhs = GalleryView(lhs);
          w.rhs = GalleryView(sources_[i]);
          return w;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<GalleryWitness> check_pt() const {
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t vi = 0; vi < views_.size(); ++vi) {
        Int lhs = put_(grid_[i][vi], views_[vi]);
        if (lhs != grid_[i][vi]) {
          GalleryWitness w = base(Law::PT);
          w.s = sources_[i];
          w.v = GalleryView(views_[vi]);
          w.lhs = GalleryView(lhs);
          w.rhs = GalleryView(grid_[i][vi]);
          return w;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<GalleryWitness> check_ss() const {
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      bool stable = false;
      for (std::size_t vi = 0; vi < views_.size() && !stable; ++vi) {
        stable = grid_[i][vi] == sources_[i];
      }
      if (!stable) {
        GalleryWitness w = base(Law::SS);
        w.s = sources_[i];
        return w;
      }
    }
    return std::nullopt;
  }

  std::optional<GalleryWitness> check_ps() const {
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      bool reached = false;
      for (std::size_t j = 0; j < sources_.size() && !reached; ++j) {
        for (std::size_t vj = 0; vj < views_.size() && !reached; ++vj) {
          reached = grid_[j][vj] == sources_[i];
        }
      }
      if (!reached) {
        GalleryWitness w = base(Law::PS);
        w.s = sources_[i];
        return w;
      }
    }
    return std::nullopt;
  }

  std::optional<GalleryWitness> check_vd() const {
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t j = 0; j < sources_.size(); ++j) {
        for (std::size_t vi = 0; vi < views_.size(); ++vi) {
          for (std::size_t vj = 0; vj < views_.size(); ++vj) {
            if (grid_[i][vi] == grid_[j][vj] && views_[vi] != views_[vj]) {
              GalleryWitness w = base(Law::VD);
              w.s = sources_[i];
              w.s_prime = sources_[j];
              w.v = GalleryView(views_[vi]);
              w.v_prime = GalleryView(views_[vj]);
              w.lhs = GalleryView(views_[vi]);
              w.rhs = GalleryView(views_[vj]);
              return w;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<GalleryWitness> check_pi() const {
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t vi = 0; vi < views_.size(); ++vi) {
        for (std::size_t vj = 0; vj < views_.size(); ++vj) {
          if (grid_[i][vi] == grid_[i][vj] && views_[vi] != views_[vj]) {
            GalleryWitness w = base(Law::PI);
            w.s = sources_[i];
            w.v = GalleryView(views_[vi]);
            w.v_prime = GalleryView(views_[vj]);
            w.lhs = GalleryView(views_[vi]);
            w.rhs = GalleryView(views_[vj]);
            return w;
          }
        }
      }
    }
    return std::nullopt;
  }

  void require_get() const {
    if (!get_) throw std::logic_error("law needs a get table but the entry has none");
  }

  std::function<ViewT(const Int&)> get_;
  std::function<Int(const Int&, const ViewT&)> put_;
  int window_;
  std::vector<Int> sources_;
  std::vector<ViewT> views_;
  std::vector<std::vector<Int>> grid_;  // grid_[i][vi] = put(sources_[i], views_[vi])
  std::vector<ViewT> got_;              // got_[i] = get(sources_[i])
};

/// lhs != rhs, and any recorded sides agree with the recomputed ones.
bool sides_refute(const GalleryWitness& witness, const GalleryView& lhs,
                  const GalleryView& rhs) {
  if (lhs == rhs) return false;
  if (witness.lhs && *witness.lhs != lhs) return false;
  if (witness.rhs && *witness.rhs != rhs) return false;
  return true;
}

template <class ViewT, class LensT>
bool replay_witness(const LensT& lens, const GalleryWitness& witness) {
  auto view_of = [](const std::optional<GalleryView>& value) -> const ViewT* {
    return value ? std::get_if<ViewT>(&*value) : nullptr;
  };
  const ViewT* v = view_of(witness.v);
  const ViewT* v_prime = view_of(witness.v_prime);
  const bool has_get = static_cast<bool>(lens.get);

  switch (witness.law) {
    case Law::SG: {
      if (!witness.s || !witness.s_prime || !has_get) return false;
      Int lhs = lens.put(*witness.s, lens.get(*witness.s_prime));
      return sides_refute(witness, GalleryView(lhs), GalleryView(*witness.s_prime));
    }
    case Law::GP: {
      if (!witness.s || !has_get) return false;
      Int lhs = lens.put(*witness.s, lens.get(*witness.s));
      return sides_refute(witness, GalleryView(lhs), GalleryView(*witness.s));
    }
    case Law::PG: {
      if (!witness.s || !v || !has_get) return false;
      ViewT lhs = lens.get(lens.put(*witness.s, *v));
      return sides_refute(witness, GalleryView(lhs), GalleryView(*v));
    }
    case Law::PP: {
      if (!witness.s || !v || !v_prime) return false;
      Int lhs = lens.put(lens.put(*witness.s, *v), *v_prime);
      Int rhs = lens.put(*witness.s, *v_prime);
      return sides_refute(witness, GalleryView(lhs), GalleryView(rhs));
    }
    case Law::WP: {
      if (!witness.s || !v || !has_get) return false;
      Int once = lens.put(*witness.s, *v);
      Int lhs = lens.put(*witness.s, lens.get(once));
      return sides_refute(witness, GalleryView(lhs), GalleryView(once));
    }
    case Law::UD: {
      if (!witness.s || !v || !has_get) return false;
      Int lhs = lens.put(lens.put(*witness.s, *v), lens.get(*witness.s));
      return sides_refute(witness, GalleryView(lhs), GalleryView(*witness.s));
    }
    case Law::PT: {
      if (!witness.s || !v) return false;
      Int once = lens.put(*witness.s, *v);
      Int lhs = lens.put(once, *v);
      return sides_refute(witness, GalleryView(lhs), GalleryView(once));
    }
    case Law::SS: {
      if (!witness.s || witness.window < 1) return false;
      WindowChecker<ViewT> checker(lens.get, lens.put, witness.window);
      return checker.stabilizer_free(*witness.s);
    }
    case Law::PS: {
      if (!witness.s || witness.window < 1) return false;
      WindowChecker<ViewT> checker(lens.get, lens.put, witness.window);
      return checker.preimage_free(*witness.s);
    }
    case Law::VD: {
      if (!witness.s || !witness.s_prime || !v || !v_prime) return false;
      if (lens.put(*witness.s, *v) != lens.put(*witness.s_prime, *v_prime)) return false;
      return sides_refute(witness, GalleryView(*v), GalleryView(*v_prime));
    }
    case Law::PI: {
      if (!witness.s || !v || !v_prime) return false;
      if (lens.put(*witness.s, *v) != lens.put(*witness.s, *v_prime)) return false;
      return sides_refute(witness, GalleryView(*v), GalleryView(*v_prime));
    }
  }
  return false;
}

std::vector<GalleryEntry> build_gallery() {
  using enum Law;
  std::vector<GalleryEntry> entries;

  entries.push_back(
      {"sg_double", "get(s) = 2s", "put(s, v) = ⌊v/2⌋",
       IntLens{[](const Int& s) -> Int { return 2 * s; },
               [](const Int&, const Int& v) -> Int { return floor_div(v, 2); }},
       {SG},
       {},
       "halving put left-inverts the doubling get, so any source is rebuilt "
       "from its view alone"});

  entries.push_back(
      {"gp_diff", "get(s) = 2s", "put(s, v) = v - s",
       IntLens{[](const Int& s) -> Int { return 2 * s; },
               [](const Int& s, const Int& v) -> Int { return v - s; }},
       {GP},
       {SG},
       "putting back the unchanged view 2s - s returns s, yet foreign views "
       "drag the source along, so the strong form fails"});

  entries.push_back(
      {"wp_pair", "get(s) = (s, s)", "put(s, (v₁, v₂)) = v₁",
       PairLens{[](const Int& s) -> ViewPair { return {s, s}; },
                [](const Int&, const ViewPair& v) -> Int { return v.first; }},
       {WP},
       {PG},
       "put keeps only the first component, so a pair with unequal components "
       "survives one put but reads back as a diagonal"});

  entries.push_back(
      {"ud_parity", "get(s) = ⌊s/2⌋", "put(s, v) = 2v - s + 1 + 2⌊s/2⌋",
       IntLens{[](const Int& s) -> Int { return floor_div(s, 2); },
               [](const Int& s, const Int& v) -> Int {
                 return 2 * v - s + 1 + 2 * floor_div(s, 2);
               }},
       {UD},
       {},
       "put flips the parity bit around the stored half, so a second put with "
       "the original view restores the original source"});

  entries.push_back(
      {"ss_affine", "", "put(s, v) = (v - s + 1)v",
       IntLens{nullptr,
               [](const Int& s, const Int& v) -> Int { return (v - s + 1) * v; }},
       {SS},
       {},
       "put(s, s) = s stabilizes every source; repeated puts with a fixed view "
       "need not settle (put(0, 2) = 6 but put(6, 2) = -6), so idempotence is "
       "deliberately not claimed despite sometimes being attributed to this "
       "update rule"});

  entries.push_back(
      {"ps_linear", "", "put(s, v) = 2s - 3v",
       IntLens{nullptr,
               [](const Int& s, const Int& v) -> Int { return 2 * s - 3 * v; }},
       {PS},
       {SS},
       "2s - 3v reaches every integer, but put(s, v) = s forces s = 3v, so "
       "only multiples of three are stable"});

  entries.push_back(
      {"pg_halve", "get(s) = ⌊s/2⌋", "put(s, v) = 2v",
       IntLens{[](const Int& s) -> Int { return floor_div(s, 2); },
               [](const Int&, const Int& v) -> Int { return 2 * v; }},
       {PG},
       {},
       "put writes 2v, whose half reads back as exactly v"});

  entries.push_back(
      {"vd_pow", "", "put(s, v) = 2^|s|(2v - 1)",
       IntLens{nullptr,
               [](const Int& s, const Int& v) -> Int {
                 return pow2_abs(s) * (2 * v - 1);
               }},
       {VD},
       {},
       "the odd factor 2v - 1 is recovered uniquely from any put result, so "
       "distinct views never collide"});

  entries.push_back(
      {"pi_pow", "", "put(s, v) = 2^|s|·v",
       IntLens{nullptr,
               [](const Int& s, const Int& v) -> Int { return pow2_abs(s) * v; }},
       {PI},
       {VD},
       "scaling by 2^|s| is injective for each fixed s, while put(1, 1) = "
       "put(0, 2) = 2 collides across sources"});

  entries.push_back(
      {"pp_floor", "", "put(s, v) = 2⌊s/2⌋ - 2⌊v/2⌋ + v",
       IntLens{nullptr,
               [](const Int& s, const Int& v) -> Int {
                 return 2 * floor_div(s, 2) - 2 * floor_div(v, 2) + v;
               }},
       {PP},
       {},
       "the update keeps only the parity of v on top of 2⌊s/2⌋, so a second "
       "put fully erases the first"});

  entries.push_back(
      {"pt_floor", "", "put(s, v) = 2⌊(s - v)/2⌋ + v",
       IntLens{nullptr,
               [](const Int& s, const Int& v) -> Int {
                 return 2 * floor_div(s - v, 2) + v;
               }},
       {PT},
       {PP},
       "putting the same view twice is idempotent, yet an intervening "
       "different view shifts the base: put(put(0, 1), 0) = -2 while "
       "put(0, 0) = 0"});

  entries.push_back(
      {"identity", "get(s) = s", "put(s, v) = v",
       IntLens{[](const Int& s) -> Int { return s; },
               [](const Int&, const Int& v) -> Int { return v; }},
       LawSet::all(),
       {},
       "get and put are identities, so every law holds outright"});

  return entries;
}

}  // namespace

std::string to_string(const GalleryView& value) {
  if (const Int* single = std::get_if<Int>(&value)) return single->str();
  const ViewPair& pair = std::get<ViewPair>(value);
  return "(" + pair.first.str() + ", " + pair.second.str() + ")";
}

std::string_view to_string(GalleryVerdict verdict) {
  switch (verdict) {
    case GalleryVerdict::ConsistentWithClaim: return "consistent with claim";
    case GalleryVerdict::WitnessFound: return "witness found";
    case GalleryVerdict::WindowTooSmall: return "window too small";
    case GalleryVerdict::ClaimViolated: return "claim violated";
  }
  return "unknown";
}

Int floor_div(const Int& numerator, const Int& denominator) {
  if (denominator <= 0) {
    throw std::invalid_argument("floor_div requires a positive denominator");
  }
  Int quotient = numerator / denominator;
  if (numerator % denominator != 0 && numerator < 0) --quotient;
  return quotient;
}

bool GalleryEntry::has_get() const {
  return std::visit([](const auto& lens) { return static_cast<bool>(lens.get); },
                    lens);
}

const std::vector<GalleryEntry>& list_gallery() {
  static const std::vector<GalleryEntry> entries = build_gallery();
  return entries;
}

const GalleryEntry& find_entry(std::string_view name) {
  for (const GalleryEntry& entry : list_gallery()) {
    if (entry.name == name) return entry;
  }
  throw UnknownEntry("unknown gallery entry: " + std::string(name));
}

bool WindowReport::conforms() const {
  for (const GalleryLawReport& report : laws) {
    GalleryVerdict expected = report.claimed_to_hold
                                  ? GalleryVerdict::ConsistentWithClaim
                                  : GalleryVerdict::WitnessFound;
    if (report.verdict != expected) return false;
  }
  return true;
}

bool WindowReport::window_too_small() const {
  for (const GalleryLawReport& report : laws) {
    if (report.verdict == GalleryVerdict::WindowTooSmall) return true;
  }
  return false;
}

WindowReport gallery_check(std::string_view name, int window) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  const GalleryEntry& entry = find_entry(name);
  WindowReport report;
  report.entry = entry.name;
  report.window = window;

  auto run = [&]<class LensT>(const LensT& lens) {
    using ViewT = std::conditional_t<std::is_same_v<LensT, IntLens>, Int, ViewPair>;
    WindowChecker<ViewT> checker(lens.get, lens.put, window);
    for (Law law : (entry.claimed_holds | entry.claimed_fails).to_vector()) {
      GalleryLawReport law_report;
      law_report.law = law;
      law_report.claimed_to_hold = entry.claimed_holds.contains(law);
      law_report.witness = checker.check(law);
      if (law_report.claimed_to_hold) {
        law_report.verdict = law_report.witness ? GalleryVerdict::ClaimViolated
                                                : GalleryVerdict::ConsistentWithClaim;
      } else {
        law_report.verdict = law_report.witness ? GalleryVerdict::WitnessFound
                                                : GalleryVerdict::WindowTooSmall;
      }
      report.laws.push_back(std::move(law_report));
    }
  };
  std::visit(run, entry.lens);
  return report;
}

bool gallery_replay(std::string_view name, const GalleryWitness& witness) {
  const GalleryEntry& entry = find_entry(name);
  return std::visit(
      [&]<class LensT>(const LensT& lens) {
        using ViewT = std::conditional_t<std::is_same_v<LensT, IntLens>, Int, ViewPair>;
        return replay_witness<ViewT>(lens, witness);
      },
      entry.lens);
}

}  // namespace lenslab
