#include "serev/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "serev/errors.hpp"

namespace serev {

namespace {

bool is_reserved(std::string_view name) {
  return name == "not" || name == "true" || name == "false";
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : atoms_(std::move(names)) {
  for (const auto& n : atoms_) {
    if (!valid_name(n)) throw Error("invalid atom name '" + n + "'");
  }
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (atoms_.size() > kMaxAtoms) {
    throw Error("alphabet has " + std::to_string(atoms_.size()) + " atoms; at most " +
                std::to_string(kMaxAtoms) + " are supported");
  }
}

bool Alphabet::valid_name(std::string_view name) {
  if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_';
    if (!ok) return false;
  }
  return !is_reserved(name);
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

AtomSet Alphabet::atoms(std::span<const std::string> names) const {
  AtomSet out;
  for (const auto& n : names) {
    auto i = index_of(n);
    if (!i) throw AlphabetMismatch("atom '" + n + "' is not in the alphabet");
    out = out | AtomSet::singleton(*i);
  }
  return out;
}

std::vector<std::string> Alphabet::names_of(AtomSet set) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (set.contains(i)) out.push_back(atoms_[i]);
  }
  return out;
}

std::string Alphabet::format(AtomSet set) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!set.contains(i)) continue;
    if (!first) out += ',';
    out += atoms_[i];
    first = false;
  }
  out += '}';
  return out;
}

AtomSet Alphabet::parse_set(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw Error("malformed interpretation '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  AtomSet out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    auto i = index_of(item);
    if (!i) throw AlphabetMismatch("atom '" + std::string(item) + "' is not in the alphabet");
    out = out | AtomSet::singleton(*i);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  std::vector<std::string> all(atoms_);
  all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
  return Alphabet(std::move(all));
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) {
    throw AlphabetMismatch("programs are over different alphabets: " +
                           a.format(universe(a.size())) + " vs " + b.format(universe(b.size())));
  }
}

}  // namespace serev
