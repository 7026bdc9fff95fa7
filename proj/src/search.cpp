#include "canondeg/search.hpp"

#include <algorithm>
#include <exception>
#include <regex>

#include <omp.h>

#include "canondeg/error.hpp"

namespace canondeg {

namespace {

struct Tally {
  std::vector<DegreeReport> rows;
  std::uint64_t visited = 0;
  std::uint64_t violations = 0;

  void absorb(Tally&& other) {
    rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()), std::make_move_iterator(other.rows.end()));
    visited += other.visited;
    violations += other.violations;
  }
};

bool row_less(const DegreeReport& a, const DegreeReport& b) {
  if (a.genus != b.genus) return a.genus < b.genus;
  return a.generators < b.generators;
}

// Cheap invariants first; the full report only for rows that are emitted.
void visit(const NumericalSemigroup& h, const SearchSpec& spec, Tally& tally) {
  ++tally.visited;
  if (spec.type_min || spec.type_max) {
    const int type = h.profile().type;
    if ((spec.type_min && type < *spec.type_min) || (spec.type_max && type > *spec.type_max)) return;
  }

  const Predicate& pred = spec.predicate;
  if (pred.kind == PredicateKind::All || pred.kind == PredicateKind::NAgl) {
    DegreeReport r = classify(h);
    if (!r.comparison_holds) ++tally.violations;
    if (pred.kind == PredicateKind::All || r.agl_level == pred.n) tally.rows.push_back(std::move(r));
    return;
  }

  const Comparison cmp = comparison(h);
  if (!cmp.holds) ++tally.violations;
  bool emit = false;
  switch (pred.kind) {
    case PredicateKind::ViolationsOnly: emit = !cmp.holds; break;
    case PredicateKind::Goto: emit = cmp.bideg == 1; break;
    case PredicateKind::FarFlung: emit = cmp.cdeg > 0 && cmp.bideg == h.profile().n_of; break;
    default: break;
  }
  if (emit) tally.rows.push_back(classify(h));
}

void walk_subtree(const NumericalSemigroup& root, const SearchSpec& spec, Tally& tally) {
  std::vector<NumericalSemigroup> stack{root};
  while (!stack.empty()) {
    NumericalSemigroup h = std::move(stack.back());
    stack.pop_back();
    visit(h, spec, tally);
    if (h.genus() < spec.max_genus) {
      auto kids = h.children();
      std::move(kids.begin(), kids.end(), std::back_inserter(stack));
    }
  }
}

SearchResult finish(Tally&& tally) {
  std::sort(tally.rows.begin(), tally.rows.end(), row_less);
  return SearchResult{std::move(tally.rows), tally.visited, tally.violations};
}

void check_spec(const SearchSpec& spec) {
  if (spec.max_genus < 0) throw SemigroupError(ErrorKind::PreconditionUnmet, "max genus must be >= 0");
}

}  // namespace

Predicate parse_predicate(const std::string& text) {
  if (text == "violations-only") return {PredicateKind::ViolationsOnly, 0};
  if (text == "all") return {PredicateKind::All, 0};
  if (text == "goto") return {PredicateKind::Goto, 0};
  if (text == "far-flung") return {PredicateKind::FarFlung, 0};
  static const std::regex n_agl(R"(n-agl(?::(\d+)|\((\d+)\)))");
  std::smatch m;
  if (std::regex_match(text, m, n_agl)) {
    const std::string digits = m[1].matched ? m[1].str() : m[2].str();
    if (digits.size() <= 6) return {PredicateKind::NAgl, std::stoi(digits)};
  }
  throw SemigroupError(ErrorKind::PreconditionUnmet, "unknown predicate '" + text + "'");
}

std::string to_string(const Predicate& p) {
  switch (p.kind) {
    case PredicateKind::ViolationsOnly: return "violations-only";
    case PredicateKind::All: return "all";
    case PredicateKind::Goto: return "goto";
    case PredicateKind::FarFlung: return "far-flung";
    case PredicateKind::NAgl: return "n-agl:" + std::to_string(p.n);
  }
  return "?";
}

std::vector<NumericalSemigroup> semigroups_of_genus(int g) {
  std::vector<NumericalSemigroup> level{NumericalSemigroup::full()};
  for (int depth = 0; depth < g; ++depth) {
    std::vector<NumericalSemigroup> next;
    for (const auto& h : level) {
      auto kids = h.children();
      std::move(kids.begin(), kids.end(), std::back_inserter(next));
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(),
            [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.generators() < b.generators(); });
  return level;
}

std::vector<std::uint64_t> count_by_genus(int max_genus) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(max_genus, -1) + 1), 0);
  if (max_genus < 0) return counts;
  std::vector<NumericalSemigroup> stack{NumericalSemigroup::full()};
  while (!stack.empty()) {
    NumericalSemigroup h = std::move(stack.back());
    stack.pop_back();
    ++counts[static_cast<std::size_t>(h.genus())];
    if (h.genus() < max_genus) {
      auto kids = h.children();
      std::move(kids.begin(), kids.end(), std::back_inserter(stack));
    }
  }
  return counts;
}

SearchResult search_serial(const SearchSpec& spec) {
  check_spec(spec);
  Tally tally;
  walk_subtree(NumericalSemigroup::full(), spec, tally);
  return finish(std::move(tally));
}

SearchResult search_parallel(const SearchSpec& spec) {
  check_spec(spec);
  const int threads = spec.threads > 0 ? spec.threads : omp_get_max_threads();

  // Expand breadth first until there are enough independent subtrees.
  Tally tally;
  std::vector<NumericalSemigroup> frontier{NumericalSemigroup::full()};
  const std::size_t target = 16 * static_cast<std::size_t>(threads);
  while (frontier.size() < target && frontier.front().genus() < spec.max_genus) {
    std::vector<NumericalSemigroup> next;
    for (const auto& h : frontier) {
      visit(h, spec, tally);
      auto kids = h.children();
      std::move(kids.begin(), kids.end(), std::back_inserter(next));
    }
    frontier = std::move(next);
  }

  const auto n = static_cast<std::ptrdiff_t>(frontier.size());
  std::vector<Tally> parts(frontier.size());
  std::vector<std::exception_ptr> errors(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      walk_subtree(frontier[static_cast<std::size_t>(i)], spec, parts[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& part : parts) tally.absorb(std::move(part));
  return finish(std::move(tally));
}

}  // namespace canondeg
