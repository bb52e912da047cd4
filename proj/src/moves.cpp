#include "reeder/moves.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "reeder/bits.hpp"
#include "reeder/error.hpp"
#include "reeder/orbits.hpp"

namespace reeder {

namespace {

// Move at free position c in compact coordinates: the move flips bit c when
// popcount(state & mask[c]) + parity[c] is odd.
struct CompactMoves {
  std::vector<std::uint64_t> mask;
  std::vector<std::uint64_t> parity;
};

CompactMoves compact_moves(const Diagram& d) {
  CompactMoves out;
  const std::uint64_t free = d.free_mask();
  for (std::uint64_t it = free; it != 0; it &= it - 1) {
    const int i = std::countr_zero(it);
    const std::uint64_t eff = d.effective_mask(i);
    out.mask.push_back(bits::extract(eff, free));
    out.parity.push_back(static_cast<std::uint64_t>(std::popcount(eff & d.pinned_mask()) & 1));
  }
  return out;
}

void check_cap(const Diagram& d, int max_free) {
  const int f = d.free_count();
  const int cap = std::min(max_free, kHardMaxFree);
  if (f > cap) {
    throw ResourceError("diagram has " + std::to_string(f) + " free vertices, requiring 2^" + std::to_string(f) +
                        " = " + std::to_string(std::uint64_t{1} << f) + " states; the cap is " +
                        std::to_string(cap) + " free vertices");
  }
}

bool better_rep(std::uint64_t candidate, std::uint64_t current) {
  const int pc = std::popcount(candidate);
  const int pk = std::popcount(current);
  return pc < pk || (pc == pk && candidate < current);
}

}  // namespace

Labeling apply_move(const Diagram& diagram, const Labeling& a, int i) {
  check_labeling(diagram, a);
  if (i < 0 || i >= diagram.size()) throw IndexError("move index " + std::to_string(i) + " out of range");
  return Labeling(a.size(), apply_move_bits(diagram, a.bits(), i));
}

Labeling apply_sequence(const Diagram& diagram, const Labeling& a, std::span<const int> moves) {
  Labeling out = a;
  for (int i : moves) out = apply_move(diagram, out, i);
  return out;
}

F2Matrix move_matrix(const Diagram& diagram, int i) {
  if (i < 0 || i >= diagram.size()) throw IndexError("move index " + std::to_string(i) + " out of range");
  F2Matrix m = F2Matrix::identity(diagram.size());
  if (!diagram.is_pinned(i)) m.set_row_mask(i, (std::uint64_t{1} << i) | diagram.effective_mask(i));
  return m;
}

MoveOperator move_operator(const Diagram& diagram, int i) { return MoveOperator{i, move_matrix(diagram, i)}; }

std::uint64_t encode_state(const Diagram& diagram, std::uint64_t bits) {
  return bits::extract(bits, diagram.free_mask());
}

std::uint64_t decode_state(const Diagram& diagram, std::uint64_t state) {
  return bits::deposit(state, diagram.free_mask()) | diagram.pinned_mask();
}

// ----------------------------------------------------------- ClassPartition

ClassPartition::ClassPartition(Diagram diagram, std::vector<std::uint32_t> class_id,
                               std::vector<ClassSummary> summaries)
    : diagram_(std::move(diagram)), class_id_(std::move(class_id)), summaries_(std::move(summaries)) {}

int ClassPartition::class_of(const Labeling& a) const {
  check_labeling(diagram_, a);
  return class_of_state(encode_state(diagram_, a.bits()));
}

const ClassSummary& ClassPartition::summary(int c) const {
  if (c < 0 || c >= class_count()) {
    throw IndexError("class index " + std::to_string(c) + " out of range (" + std::to_string(class_count()) +
                     " classes)");
  }
  return summaries_[static_cast<std::size_t>(c)];
}

std::vector<Labeling> ClassPartition::members(int c) const {
  summary(c);
  std::vector<Labeling> out;
  for (std::uint64_t s = 0; s < class_id_.size(); ++s) {
    if (class_id_[s] == static_cast<std::uint32_t>(c)) out.emplace_back(diagram_.size(), decode_state(diagram_, s));
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> ClassPartition::all_member_bits() const {
  std::vector<std::vector<std::uint64_t>> out(summaries_.size());
  for (std::size_t c = 0; c < summaries_.size(); ++c) out[c].reserve(summaries_[c].size);
  for (std::uint64_t s = 0; s < class_id_.size(); ++s) out[class_id_[s]].push_back(decode_state(diagram_, s));
  return out;
}

ClassPartition enumerate_classes(const Diagram& diagram, int max_free) {
  check_cap(diagram, max_free);
  const int f = diagram.free_count();
  const std::uint64_t n_states = std::uint64_t{1} << f;
  const CompactMoves moves = compact_moves(diagram);

  auto [parent, next] = detail::label_orbits(n_states, f, [&](std::uint64_t x, int c) {
    const std::uint64_t flip = (std::popcount(x & moves.mask[c]) + moves.parity[c]) & 1u;
    return x ^ (flip << c);
  });

  struct Provisional {
    std::uint64_t size = 0;
    std::uint64_t rep = 0;
    std::vector<std::uint64_t> histogram;
  };
  std::vector<Provisional> prov(next);
  for (std::uint64_t x = 0; x < n_states; ++x) {
    Provisional& p = prov[parent[x]];
    if (p.size == 0 || better_rep(x, p.rep)) p.rep = x;
    ++p.size;
    const auto comps = static_cast<std::size_t>(count_components_bits(diagram, decode_state(diagram, x)));
    if (p.histogram.size() <= comps) p.histogram.resize(comps + 1, 0);
    ++p.histogram[comps];
  }

  // Deposit is monotone, so ordering compact reps orders full labelings.
  std::vector<std::uint32_t> order(next);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return prov[a].rep < prov[b].rep; });
  std::vector<std::uint32_t> rank(next);
  for (std::uint32_t k = 0; k < next; ++k) rank[order[k]] = k;
  for (auto& id : parent) id = rank[id];

  std::vector<ClassSummary> summaries(next);
  for (std::uint32_t k = 0; k < next; ++k) {
    Provisional& p = prov[order[k]];
    ClassSummary& s = summaries[k];
    s.size = p.size;
    s.min_rep = Labeling(diagram.size(), decode_state(diagram, p.rep));
    for (std::size_t c = 0; c < p.histogram.size(); ++c) {
      if (p.histogram[c] != 0) s.component_histogram.emplace_back(static_cast<int>(c), p.histogram[c]);
    }
    s.singleton_fixed = p.size == 1;
  }
  return ClassPartition(diagram, std::move(parent), std::move(summaries));
}

bool are_equivalent(const Diagram& diagram, const Labeling& a, const Labeling& b, int max_free) {
  check_labeling(diagram, a);
  check_labeling(diagram, b);
  check_cap(diagram, max_free);
  const int f = diagram.free_count();
  const CompactMoves moves = compact_moves(diagram);
  const std::uint64_t start = encode_state(diagram, a.bits());
  const std::uint64_t goal = encode_state(diagram, b.bits());
  if (start == goal) return true;

  std::vector<std::uint64_t> seen(((std::uint64_t{1} << f) + 63) / 64, 0);
  auto mark = [&](std::uint64_t s) {
    const bool was = (seen[s / 64] >> (s % 64)) & 1u;
    seen[s / 64] |= std::uint64_t{1} << (s % 64);
    return !was;
  };
  std::vector<std::uint64_t> queue{start};
  mark(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t x = queue[head];
    for (int c = 0; c < f; ++c) {
      const std::uint64_t flip = (std::popcount(x & moves.mask[c]) + moves.parity[c]) & 1u;
      const std::uint64_t y = x ^ (flip << c);
      if (y == goal) return true;
      if (mark(y)) queue.push_back(y);
    }
  }
  return false;
}

int class_of(const ClassPartition& partition, const Labeling& a) { return partition.class_of(a); }

Labeling minimal_representative(const ClassPartition& partition, int c) {
  return partition.minimal_representative(c);
}

// ------------------------------------------------------------------ export

namespace {

std::string histogram_string(const ClassSummary& s) {
  std::string out;
  for (const auto& [comps, count] : s.component_histogram) {
    if (!out.empty()) out += ';';
    out += std::to_string(comps) + ':' + std::to_string(count);
  }
  return out;
}

std::string show(const Diagram& d, std::uint64_t bits) { return display_string(d, Labeling(d.size(), bits)); }

}  // namespace

std::string partition_to_json(const ClassPartition& partition, bool include_members) {
  const Diagram& d = partition.diagram();
  std::vector<std::vector<std::uint64_t>> members;
  if (include_members) members = partition.all_member_bits();

  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (int c = 0; c < partition.class_count(); ++c) {
    const ClassSummary& s = partition.summary(c);
    nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
    for (const auto& [comps, count] : s.component_histogram) histogram[std::to_string(comps)] = count;
    nlohmann::ordered_json entry = {
        {"index", c},
        {"size", s.size},
        {"representative", show(d, s.min_rep.bits())},
        {"weight", s.min_rep.weight()},
        {"components", histogram},
        {"singleton_fixed", s.singleton_fixed},
    };
    if (include_members) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (std::uint64_t m : members[static_cast<std::size_t>(c)]) list.push_back(show(d, m));
      entry["members"] = std::move(list);
    }
    classes.push_back(std::move(entry));
  }
  nlohmann::ordered_json doc = {
      {"diagram", d.name()},
      {"vertices", d.size()},
      {"free_vertices", d.free_count()},
      {"states", partition.state_count()},
      {"class_count", partition.class_count()},
      {"classes", std::move(classes)},
  };
  return doc.dump(2) + "\n";
}

std::string partition_to_csv(const ClassPartition& partition, bool include_members) {
  const Diagram& d = partition.diagram();
  std::vector<std::vector<std::uint64_t>> members;
  if (include_members) members = partition.all_member_bits();

  std::ostringstream os;
  os << "index,size,representative,weight,components,singleton_fixed";
  if (include_members) os << ",members";
  os << '\n';
  for (int c = 0; c < partition.class_count(); ++c) {
    const ClassSummary& s = partition.summary(c);
    os << c << ',' << s.size << ',' << show(d, s.min_rep.bits()) << ',' << s.min_rep.weight() << ','
       << histogram_string(s) << ',' << (s.singleton_fixed ? "true" : "false");
    if (include_members) {
      os << ',';
      bool first = true;
      for (std::uint64_t m : members[static_cast<std::size_t>(c)]) {
        if (!first) os << ' ';
        os << show(d, m);
        first = false;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string partition_to_text(const ClassPartition& partition, bool include_members) {
  const Diagram& d = partition.diagram();
  std::vector<std::vector<std::uint64_t>> members;
  if (include_members) members = partition.all_member_bits();

  std::ostringstream os;
  os << (d.name().empty() ? std::string("diagram") : d.name()) << ": " << partition.class_count() << " classes over "
     << partition.state_count() << " states\n";
  for (int c = 0; c < partition.class_count(); ++c) {
    const ClassSummary& s = partition.summary(c);
    os << "  [" << c << "] rep " << show(d, s.min_rep.bits()) << "  size " << s.size << "  components "
       << histogram_string(s) << (s.singleton_fixed ? "  fixed" : "") << '\n';
    if (include_members) {
      os << "      {";
      bool first = true;
      for (std::uint64_t m : members[static_cast<std::size_t>(c)]) {
        os << (first ? "" : ", ") << show(d, m);
        first = false;
      }
      os << "}\n";
    }
  }
  return os.str();
}

}  // namespace reeder
