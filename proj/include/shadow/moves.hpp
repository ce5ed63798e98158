#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shadow/gleam.hpp"

namespace shadow {

enum class MoveType { OneTwo, ZeroTwo, TwoThree, Bubble0, BubblePlus, BubbleMinus, Trading };

struct MoveKind {
  MoveType type = MoveType::OneTwo;
  bool inverse = false;

  /// `onetwo`, `zerotwo`, `twothree`, `bubble0`, `bubble+`, `bubble-`,
  /// `trading`, with suffix `-inv` for inverses.
  std::string name() const;
  static std::optional<MoveKind> parse(std::string_view text);
  /// Change in vertex count made by one application.
  int vertex_delta() const;
  bool supported() const;

  friend bool operator==(const MoveKind&, const MoveKind&) = default;
};

/// Every supported kind in a fixed order.
const std::vector<MoveKind>& all_move_kinds();
/// OneTwo, ZeroTwo, TwoThree and their inverses.
const std::vector<MoveKind>& equivalence_kinds();

/// Anchor grammar per kind (identifiers are those of the polyhedron):
///   onetwo        <vertex>:<i><j>:<+|->   wing {i,j} at the vertex, gleam sign
///   zerotwo       <l>.<a>.<v>:<m>.<b>.<w> edges l, m; slots of the cut region and walls
///   twothree      <edge>
///   bubble*       <region>
///   trading       <circle>.<cut slot>.<cap slot>:<strip region>
///   onetwo-inv, zerotwo-inv, twothree-inv   <region>
///   bubble0-inv   <circle>.<slot of the kept region>
///   trading-inv   <circle>.<little disc slot>:<cap region>:<strip region>:<+|->
struct MoveSite {
  MoveKind kind;
  std::string anchor;

  std::string str() const { return kind.name() + " " + anchor; }
  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

class MoveError : public std::runtime_error {
 public:
  enum class Kind { Stale, Unsupported, Precondition, Parity, Internal };
  MoveError(Kind kind, const std::string& message);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct Provenance {
  MoveSite site;
  std::string parent_form;
};

struct MoveResult {
  Shadow shadow;
  Provenance provenance;
  /// Site of the reverse rewrite in the result, when the kind has one.
  std::optional<MoveSite> inverse_site;
};

std::vector<MoveSite> enumerate_sites(const Shadow& s, MoveKind kind);

/// Pure rewrite. `parent_form` skips recomputing the input's canonical form.
MoveResult apply_move(const Shadow& s, const MoveSite& site, const std::string* parent_form = nullptr);

}  // namespace shadow
