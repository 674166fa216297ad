#include "zolab/structure.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "zolab/error.hpp"

namespace zolab {

Relation::Relation(int arity, int n, std::vector<std::vector<int>> tuples)
    : arity_(arity), n_(n), tuples_(std::move(tuples)) {
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  if (arity_ == 2) {
    out_.assign(static_cast<std::size_t>(n_) + 1, {});
    in_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const auto& t : tuples_) {
      out_[static_cast<std::size_t>(t[0])].push_back(t[1]);
      in_[static_cast<std::size_t>(t[1])].push_back(t[0]);
    }
    for (auto& v : in_) std::sort(v.begin(), v.end());
    // out_ is already sorted because tuples_ is.
  }
}

bool Relation::contains(std::span<const int> t) const {
  if (static_cast<int>(t.size()) != arity_) return false;
  if (arity_ == 2) {
    if (t[0] < 1 || t[0] > n_) return false;
    const auto& row = out_[static_cast<std::size_t>(t[0])];
    return std::binary_search(row.begin(), row.end(), t[1]);
  }
  std::vector<int> key(t.begin(), t.end());
  return std::binary_search(tuples_.begin(), tuples_.end(), key);
}

const std::vector<int>& Relation::out(int v) const {
  if (arity_ != 2) throw error("adjacency requested on relation of arity " + std::to_string(arity_));
  return out_.at(static_cast<std::size_t>(v));
}

const std::vector<int>& Relation::in(int v) const {
  if (arity_ != 2) throw error("adjacency requested on relation of arity " + std::to_string(arity_));
  return in_.at(static_cast<std::size_t>(v));
}

RelationalStructure::RelationalStructure(
    Vocabulary vocab, int n, std::map<std::string, std::vector<std::vector<int>>> relations)
    : vocab_(std::move(vocab)), n_(n) {
  if (n_ < 0) throw error("universe size must be >= 0");
  for (auto& [name, tuples] : relations) {
    const Predicate& p = vocab_.at(name);
    for (auto& t : tuples) {
      if (static_cast<int>(t.size()) != p.arity)
        throw error("arity mismatch: tuple of length " + std::to_string(t.size()) + " for " +
                    name + "/" + std::to_string(p.arity));
      for (int v : t)
        if (v < 1 || v > n_)
          throw error("node id " + std::to_string(v) + " out of range [1," + std::to_string(n_) +
                      "] in " + name);
      if (p.cls != PredClass::plain && t[0] == t[1])
        throw error("irreflexivity violated: (" + std::to_string(t[0]) + "," +
                    std::to_string(t[1]) + ") in " + name);
    }
    if (p.cls == PredClass::symmetric_irreflexive) {
      std::vector<std::vector<int>> closed = tuples;
      for (const auto& t : tuples) closed.push_back({t[1], t[0]});
      tuples = std::move(closed);
    }
    rels_.emplace(name, Relation(p.arity, n_, std::move(tuples)));
  }
  // Predicates not mentioned get empty interpretations.
  for (const auto& p : vocab_.predicates())
    if (!rels_.count(p.name)) rels_.emplace(p.name, Relation(p.arity, n_, {}));
}

const Relation& RelationalStructure::relation(std::string_view pred) const {
  auto it = rels_.find(std::string(pred));
  if (it == rels_.end()) throw error("unknown relation symbol '" + std::string(pred) + "'");
  return it->second;
}

bool RelationalStructure::operator==(const RelationalStructure& o) const {
  if (!(vocab_ == o.vocab_) || n_ != o.n_) return false;
  for (const auto& p : vocab_.predicates())
    if (relation(p.name).tuples() != o.relation(p.name).tuples()) return false;
  return true;
}

void RelationalStructure::write_text(std::ostream& os) const {
  os << "vocab " << vocab_.name() << "\n";
  os << "n " << n_ << "\n";
  for (const auto& p : vocab_.predicates()) {
    for (const auto& t : relation(p.name).tuples()) {
      os << p.name;
      for (int v : t) os << ' ' << v;
      os << "\n";
    }
  }
}

std::string RelationalStructure::to_text() const {
  std::ostringstream os;
  write_text(os);
  return os.str();
}

RelationalStructure RelationalStructure::read_text(std::istream& is) {
  std::string line;
  bool have_vocab = false, have_n = false;
  Vocabulary vocab;
  int n = 0;
  std::map<std::string, std::vector<std::vector<int>>> rels;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "vocab") {
      std::string name;
      if (!(ls >> name)) throw error("line " + std::to_string(lineno) + ": missing vocab name");
      vocab = Vocabulary::builtin(name);
      have_vocab = true;
    } else if (head == "n") {
      if (!(ls >> n)) throw error("line " + std::to_string(lineno) + ": missing universe size");
      have_n = true;
    } else {
      if (!have_vocab) throw error("line " + std::to_string(lineno) + ": tuple before vocab line");
      const Predicate& p = vocab.at(head);
      std::vector<int> t;
      int v;
      while (ls >> v) t.push_back(v);
      if (static_cast<int>(t.size()) != p.arity)
        throw error("line " + std::to_string(lineno) + ": arity mismatch for " + head);
      rels[head].push_back(std::move(t));
    }
  }
  if (!have_vocab || !have_n) throw error("structure file missing vocab/n header");
  return make_structure(std::move(vocab), n, std::move(rels));
}

RelationalStructure make_structure(Vocabulary vocab, int n,
                                   std::map<std::string, std::vector<std::vector<int>>> relations) {
  return RelationalStructure(std::move(vocab), n, std::move(relations));
}

RelationalStructure read_structure_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw error("cannot open structure file: " + path);
  return RelationalStructure::read_text(f);
}

void write_structure_file(const RelationalStructure& m, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw error("cannot write structure file: " + path);
  m.write_text(f);
}

}  // namespace zolab
