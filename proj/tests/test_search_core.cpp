#include <doctest.h>

#include "parsearch/shared_state.hpp"

using namespace parsearch;

TEST_CASE("registry returns a fresh undiscovered record for a new key") {
  StateRegistry registry;
  const StateId id = registry.get_or_insert(42, 7.5);
  const StateRecord& rec = registry.record(id);
  CHECK(rec.g == kInfiniteCost);
  CHECK(rec.h == 7.5);
  CHECK(rec.n_successors_generated == 0);
  CHECK(rec.status == StateStatus::kUndiscovered);
  CHECK(rec.key == 42);
}

TEST_CASE("registry interning is idempotent") {
  StateRegistry registry;
  const StateId a = registry.get_or_insert(42, 7.5);
  const StateId b = registry.get_or_insert(42, 99.0);  // second h is ignored
  CHECK(a == b);
  CHECK(registry.size() == 1);
  CHECK(registry.record(a).h == 7.5);
  CHECK(&registry.record(a) == &registry.record(b));
}

TEST_CASE("distinct keys get distinct records") {
  StateRegistry registry;
  const StateId a = registry.get_or_insert(1, 0);
  const StateId b = registry.get_or_insert(2, 0);
  CHECK(a != b);
  CHECK(registry.size() == 2);
}

TEST_CASE("record references stay valid as the registry grows") {
  StateRegistry registry;
  const StateId first = registry.get_or_insert(0, 0);
  StateRecord* rec = &registry.record(first);
  for (StateKey k = 1; k < 5000; ++k) registry.get_or_insert(k, 0);
  CHECK(rec == &registry.record(first));
}

TEST_CASE("BE and CLOSED transitions follow the status lifecycle") {
  EdgeSearchCore core;
  const StateId id = core.registry.get_or_insert(10, 0);
  StateRecord& rec = core.registry.record(id);
  rec.g = 0;
  rec.status = StateStatus::kOpenDummy;

  core.mark_partially_expanded(id);
  CHECK(rec.status == StateStatus::kPartiallyExpanded);
  CHECK(core.be.count(id) == 1);
  CHECK(core.closed_count() == 0);

  core.mark_closed(id);
  CHECK(rec.status == StateStatus::kClosed);
  CHECK(core.be.count(id) == 0);
  CHECK(core.closed_count() == 1);
}

TEST_CASE("closing a state that is not in BE fails fast") {
  EdgeSearchCore core;
  const StateId id = core.registry.get_or_insert(10, 0);
  CHECK_THROWS_AS(core.mark_closed(id), std::logic_error);
  CHECK_THROWS_AS(core.mark_partially_expanded(id), std::logic_error);  // undiscovered
}

TEST_CASE("a state is never in BE and CLOSED at once") {
  EdgeSearchCore core;
  const StateId id = core.registry.get_or_insert(10, 0);
  core.registry.record(id).status = StateStatus::kOpenDummy;
  core.mark_partially_expanded(id);
  core.mark_closed(id);
  CHECK_THROWS_AS(core.mark_closed(id), std::logic_error);
  CHECK_THROWS_AS(core.mark_partially_expanded(id), std::logic_error);
}

TEST_CASE("OPEN and BE mutations bump the change epoch") {
  EdgeSearchCore core;
  const StateId id = core.registry.get_or_insert(10, 0);
  core.registry.record(id).status = StateStatus::kOpenDummy;
  const auto before = core.change_epoch();
  core.mark_partially_expanded(id);
  CHECK(core.change_epoch() > before);
}
