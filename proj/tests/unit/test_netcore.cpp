#include <random>
#include <set>

#include "doctest.h"
#include "sortnet/errors.hpp"
#include "sortnet/evaluate.hpp"
#include "sortnet/format.hpp"
#include "sortnet/network.hpp"
#include "support/networks.hpp"

using namespace sortnet;
using namespace sortnet::testing;

namespace {

std::set<BinaryWord> sorted_words(int n) {
  std::set<BinaryWord> out;
  for (int z = 0; z <= n; ++z) out.insert(BinaryWord::sorted(n, z));
  return out;
}

std::set<BinaryWord> as_set(const std::vector<BinaryWord>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("netcore.model") {
  TEST_CASE("comparator and layer shape") {
    CHECK_THROWS_AS(Layer({{2, 2}}), ShapeError);
    CHECK_THROWS_AS(Layer({{3, 1}}), ShapeError);
    CHECK_THROWS_AS(Layer({{0, 1}}), ShapeError);
    CHECK_THROWS_AS(Layer({{1, 2}, {2, 3}}), ShapeError);
    Layer l{{4, 5}, {1, 3}};
    REQUIRE(l.size() == 2);
    CHECK(l.comparators().front() == Comparator{1, 3});
    CHECK(l.uses(3));
    CHECK_FALSE(l.uses(2));
    CHECK(l.comparator_on(5) == Comparator{4, 5});
    CHECK_FALSE(l.comparator_on(2).has_value());
    CHECK(l.max_channel() == 5);
    CHECK(l.with({2, 6}).size() == 3);
    CHECK(l.without({1, 3}) == Layer{{4, 5}});
  }

  TEST_CASE("network shape") {
    CHECK_THROWS_AS(Network(0), ShapeError);
    CHECK_THROWS_AS(Network(3, {Layer{{1, 4}}}), ShapeError);
    Network empty(4, {Layer{}, Layer{}});
    CHECK(empty.depth() == 2);
    CHECK(empty.size() == 0);

    auto f = optimal5();
    CHECK(f.channels() == 5);
    CHECK(f.depth() == 5);
    CHECK(f.size() == 9);
    CHECK(f.layer(5) == Layer{{2, 3}});
    CHECK(f.last_layer() == Layer{{2, 3}});
    CHECK_THROWS_AS(f.layer(0), RangeError);
    CHECK_THROWS_AS(f.layer(6), RangeError);
    CHECK(f.prefix(2).depth() == 2);
    CHECK(extends(f, f.prefix(3)));
    CHECK_FALSE(extends(f, tight5().prefix(3)));
  }

  TEST_CASE("concatenate") {
    auto f = optimal5();
    auto joined = concatenate(f.prefix(2), Network(5, {f.layer(3), f.layer(4), f.layer(5)}));
    CHECK(joined.depth() == 5);
    CHECK(joined == f);
    CHECK(concatenate(Network(5), f) == f);
    CHECK(concatenate(f.prefix(4), Network(5, {f.layer(5)})) == f);
    CHECK_THROWS_AS(concatenate(Network(4), f), ShapeError);
  }

  TEST_CASE("parberry layer") {
    CHECK(parberry_layer(5) == Layer{{1, 2}, {3, 4}});
    CHECK(parberry_layer(6).size() == 3);
    CHECK(parberry_layer(1).empty());
  }

  TEST_CASE("binary words") {
    auto w = BinaryWord::from_string("10101");
    CHECK(w.length == 5);
    CHECK(w.at(1) == 1);
    CHECK(w.at(2) == 0);
    CHECK(w.popcount() == 3);
    CHECK(w.to_string() == "10101");
    CHECK_FALSE(w.is_sorted());
    CHECK(BinaryWord::sorted(5, 2).to_string() == "00111");
    CHECK(BinaryWord::sorted(5, 2).is_sorted());
    CHECK(bitwise_leq(BinaryWord::from_string("00101"), w));
    CHECK_FALSE(bitwise_leq(BinaryWord::from_string("01000"), w));
    CHECK_THROWS_AS(BinaryWord::from_string("10a"), ShapeError);
  }
}

TEST_SUITE("netcore.evaluate") {
  TEST_CASE("examples") {
    auto f = optimal5();
    CHECK(evaluate(f, BinaryWord::from_string("10101")).to_string() == "00111");
    CHECK(evaluate(f, BinaryWord::from_string("00000")).to_string() == "00000");
    CHECK(evaluate(f, BinaryWord::from_string("00111")).to_string() == "00111");
    CHECK_THROWS_AS(evaluate(f, BinaryWord::from_string("101")), ShapeError);
  }

  TEST_CASE("outputs examples") {
    CHECK(as_set(outputs(Network(2))).size() == 4);
    auto single = as_set(outputs(Network(2, {Layer{{1, 2}}})));
    CHECK(single == std::set<BinaryWord>{BinaryWord::from_string("00"), BinaryWord::from_string("01"),
                                         BinaryWord::from_string("11")});
    for (const auto& net : {optimal5(), tight4(), tight5(), odd_even_transposition(7)}) {
      CHECK(as_set(outputs(net)) == sorted_words(net.channels()));
    }
  }

  TEST_CASE("is_sorting_network examples") {
    CHECK(is_sorting_network(optimal5()));
    CHECK(is_sorting_network(tight4()));
    CHECK(is_sorting_network(tight5()));
    CHECK_FALSE(is_sorting_network(Network(2)));
    CHECK_FALSE(is_sorting_network(optimal5().prefix(4)));
    CHECK(is_sorting_network(Network(1)));
  }

  TEST_CASE("known constructions sort") {
    for (int n = 2; n <= 12; ++n) {
      CAPTURE(n);
      CHECK(is_sorting_network(odd_even_transposition(n)));
      CHECK(is_sorting_network(insertion_sort(n)));
      CHECK(is_sorting_network(merge_exchange(n)));
    }
    CHECK(is_sorting_network(batcher_odd_even(8)));
    CHECK(is_sorting_network(batcher_odd_even(16)));
  }

  TEST_CASE("capacity bound") {
    CHECK_THROWS_AS(outputs(Network(21)), CapacityError);
    CHECK_THROWS_AS(is_sorting_network(Network(21)), CapacityError);
    CHECK_THROWS_AS(is_sorting_network(Network(9), 8), CapacityError);
    CHECK_NOTHROW(is_sorting_network(Network(8), 8));
  }

  TEST_CASE("bit-parallel word access covers every input") {
    auto state = BitState::all_inputs(7);
    REQUIRE(state.input_count() == 128);
    for (std::uint32_t x = 0; x < 128; ++x) CHECK(state.word(x) == BinaryWord{7, x});
    CHECK(state.can_be_inverted(1, 2));
    state.apply(Comparator{1, 2});
    CHECK_FALSE(state.can_be_inverted(1, 2));
  }
}

TEST_SUITE("netcore.properties") {
  TEST_CASE("permutation, monotonicity and sorted fixpoint on random networks") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      int n = 2 + trial % 9;
      auto net = random_network(rng, n, 1 + trial % 7);
      std::uniform_int_distribution<std::uint32_t> word(0, (1u << n) - 1);
      for (int s = 0; s < 20; ++s) {
        BinaryWord x{n, word(rng)};
        BinaryWord y{n, x.bits | word(rng)};
        auto fx = evaluate(net, x);
        auto fy = evaluate(net, y);
        CHECK(fx.popcount() == x.popcount());
        CHECK(bitwise_leq(fx, fy));
      }
      for (int z = 0; z <= n; ++z) CHECK(evaluate(net, BinaryWord::sorted(n, z)) == BinaryWord::sorted(n, z));
    }
  }

  TEST_CASE("bit-parallel evaluation equals naive evaluation") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 1 + trial % 10;
      auto net = random_network(rng, n, 1 + trial % 6);
      auto state = BitState::all_inputs(n);
      state.apply(net);
      for (std::uint32_t x = 0; x < (1u << n); ++x) {
        REQUIRE(state.word(x) == evaluate(net, BinaryWord{n, x}));
      }
      CHECK(as_set(outputs(net)) == naive_outputs(net));
    }
  }

  TEST_CASE("is_sorting_network iff outputs are the sorted words") {
    std::mt19937 rng(3);
    int sorting = 0;
    for (int trial = 0; trial < 400; ++trial) {
      int n = 2 + trial % 5;
      auto net = random_network(rng, n, 2 + trial % 8);
      bool s = is_sorting_network(net);
      sorting += s;
      CHECK(s == (naive_outputs(net) == sorted_words(n)));
    }
    CHECK(sorting > 0);
  }
}

TEST_SUITE("netcore.format") {
  TEST_CASE("parse examples") {
    auto net = parse_network("n 2\n1:2\n");
    CHECK(net == Network(2, {Layer{{1, 2}}}));
    auto with_empty = parse_network("# comment\n\nn 3\n-\n1:3\n");
    CHECK(with_empty.depth() == 2);
    CHECK(with_empty.layer(1).empty());
  }

  TEST_CASE("canonical round trip") {
    std::string messy = "# five channels\nn 5\n4:5   2:3\n2:4 1:3\n3:5 1:4\n3:4 1:2\n2:3\n";
    auto net = parse_network(messy);
    CHECK(net == optimal5());
    auto text = format_network(net);
    CHECK(text == "n 5\n2:3 4:5\n1:3 2:4\n1:4 3:5\n1:2 3:4\n2:3\n");
    CHECK(parse_network(text) == net);
    CHECK(format_network(Network(3, {Layer{}})) == "n 3\n-\n");
    CHECK(format_layer(Layer{{3, 4}, {1, 2}}) == "1:2 3:4");
  }

  TEST_CASE("round trip on random networks") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      auto net = random_network(rng, 2 + trial % 10, trial % 6);
      CHECK(parse_network(format_network(net)) == net);
    }
  }

  TEST_CASE("errors carry line numbers") {
    auto line_of = [](const char* text) -> std::size_t {
      try {
        parse_network(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("n 3\n1:2 2:3\n") == 2);
    CHECK(line_of("n 3\n1:2\n1:4\n") == 3);
    CHECK(line_of("n 3\n1-2\n") == 2);
    CHECK(line_of("n 3\n2:1\n") == 2);
    CHECK(line_of("# x\nchannels 3\n") == 2);
    CHECK(line_of("n 3\n- 1:2\n") == 2);
    try {
      parse_network("n 3\n1:2 2:3\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("duplicate channel 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_network(""), ParseError);
    CHECK_THROWS_AS(parse_network("n 0\n"), ParseError);
  }

  TEST_CASE("file io") {
    auto path = std::filesystem::temp_directory_path() / "sortnet_test_optimal5.net";
    write_network_file(path, optimal5());
    CHECK(read_network_file(path) == optimal5());
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_network_file(path), Error);
  }
}
