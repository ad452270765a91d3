#include "lpdo/symbol.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace lpdo {

namespace {

struct Entry {
  Symbol::Kind kind;
  std::string name;
  int dx = 0;
  int dy = 0;
};

struct Registry {
  std::mutex mutex;
  std::deque<Entry> entries{{Symbol::Kind::X, "x"}, {Symbol::Kind::Y, "y"}};
  std::unordered_map<std::string, Symbol::Id> by_name{{"x", Symbol::x}, {"y", Symbol::y}};
  std::map<std::pair<int, int>, Symbol::Id> jets;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::string jet_name(int dx, int dy) {
  std::string name = "p3";
  if (dx + dy > 0) {
    name += '_';
    name.append(static_cast<std::size_t>(dx), 'x');
    name.append(static_cast<std::size_t>(dy), 'y');
  }
  return name;
}

Symbol::Id register_name(std::string_view name, Symbol::Kind kind) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  const std::string key(name);
  if (auto it = r.by_name.find(key); it != r.by_name.end()) {
    if (r.entries[it->second].kind != kind) {
      throw std::invalid_argument("symbol '" + key + "' already used with another role");
    }
    return it->second;
  }
  const auto id = static_cast<Symbol::Id>(r.entries.size());
  r.entries.push_back({kind, key});
  r.by_name.emplace(key, id);
  return id;
}

const Entry& entry(Symbol::Id id) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  if (id >= r.entries.size()) throw std::out_of_range("unknown symbol id");
  return r.entries[id];
}

}  // namespace

bool Symbol::is_reserved(std::string_view name) {
  return name == "x" || name == "y" || name == "i" || name == "Dx" || name == "Dy" ||
         name == "sqrt" || (name.size() >= 2 && name.substr(0, 2) == "p3");
}

Symbol::Id Symbol::parameter(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
    throw std::invalid_argument("invalid parameter name '" + std::string(name) + "'");
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      throw std::invalid_argument("invalid parameter name '" + std::string(name) + "'");
    }
  }
  if (is_reserved(name)) {
    throw std::invalid_argument("parameter name '" + std::string(name) + "' is reserved");
  }
  return register_name(name, Kind::Parameter);
}

Symbol::Id Symbol::internal(std::string_view name) {
  return register_name("_" + std::string(name), Kind::Parameter);
}

std::optional<Symbol::Id> Symbol::find(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  if (auto it = r.by_name.find(std::string(name)); it != r.by_name.end()) return it->second;
  return std::nullopt;
}

Symbol::Id Symbol::jet(int dx, int dy) {
  if (dx < 0 || dy < 0) throw std::invalid_argument("negative jet order");
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  if (auto it = r.jets.find({dx, dy}); it != r.jets.end()) return it->second;
  const auto id = static_cast<Id>(r.entries.size());
  const std::string name = jet_name(dx, dy);
  r.entries.push_back({Kind::Jet, name, dx, dy});
  r.by_name.emplace(name, id);
  r.jets.emplace(std::make_pair(dx, dy), id);
  return id;
}

Symbol::Kind Symbol::kind(Id id) { return entry(id).kind; }

std::string Symbol::name(Id id) { return entry(id).name; }

std::pair<int, int> Symbol::jet_order(Id id) {
  const Entry& e = entry(id);
  if (e.kind != Kind::Jet) throw std::invalid_argument("not a jet symbol");
  return {e.dx, e.dy};
}

}  // namespace lpdo
