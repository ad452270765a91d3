#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace lpdo {

/// Independent variable used by total derivatives.
enum class Direction { X, Y };

/// Process-wide, append-only table of the symbols that may occur in
/// expressions.  Ids double as the lexicographic variable order: x and y
/// come first, then symbols in order of registration.
///
/// Kinds:
///   - coordinates x, y (the differentiation variables);
///   - parameters: commuting constants with zero derivative;
///   - jets: the formal derivatives p3, p3_x, p3_y, p3_xx, ... of the unknown
///     coefficient p3 in the degenerate (Riccati) path.  d/dx of the jet
///     (i, j) is the jet (i + 1, j).
///
/// Registration is serialised by a mutex; lookups of already registered ids
/// never block writers for long.
class Symbol {
public:
  using Id = std::uint32_t;
  enum class Kind { X, Y, Parameter, Jet };

  static constexpr Id x = 0;
  static constexpr Id y = 1;

  /// Id of the parameter with this name, registering it on first use.
  /// Throws std::invalid_argument for reserved or malformed names.
  static Id parameter(std::string_view name);
  /// Internal unknown constants (names starting with '_'), never produced by
  /// the parser.
  static Id internal(std::string_view name);
  static std::optional<Id> find(std::string_view name);
  static Id jet(int dx, int dy);

  static Kind kind(Id id);
  static std::string name(Id id);
  /// Derivative orders of a jet symbol.
  static std::pair<int, int> jet_order(Id id);
  static bool is_jet(Id id) { return kind(id) == Kind::Jet; }
  static bool is_coordinate(Id id) { return id == x || id == y; }

  /// True for names the operator grammar reserves (x, y, i, Dx, Dy, sqrt).
  static bool is_reserved(std::string_view name);
};

}  // namespace lpdo
