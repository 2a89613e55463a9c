#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "topoarith/render.hpp"

using namespace topoarith;

namespace {

std::vector<Integer> sorted_by(bool (*less)(std::uint64_t, std::uint64_t)) {
    std::vector<std::uint64_t> xs(32);
    for (std::uint64_t i = 0; i < 32; ++i) xs[i] = i;
    std::sort(xs.begin(), xs.end(), less);
    return {xs.begin(), xs.end()};
}

}  // namespace

TEST_CASE("leaf order follows the comparators") {
    CHECK(label_sequence(OrderKind::final_digits, 5) == sorted_by(oracle::fd_less));
    CHECK(label_sequence(OrderKind::variant, 5) == sorted_by(oracle::variant_less));
    CHECK(label_sequence(OrderKind::variant, 5).front() == Integer(0));
    const auto fd = label_sequence(OrderKind::final_digits, 5);
    CHECK(fd.front() == Integer(16));
    // The 15 nonzero evens sit left of 0.
    CHECK(fd[15] == Integer(0));
}

TEST_CASE("depth-2 tree layout") {
    const auto nodes = layout_tree(OrderKind::final_digits, 2);
    REQUIRE(nodes.size() == 7);
    std::vector<std::string> classes;
    for (const auto& n : nodes) classes.push_back(n.s.str());
    CHECK(classes == std::vector<std::string>{"00", "0", "10", "", "01", "1", "11"});
    CHECK(nodes[2].label == Integer(2));
    CHECK(nodes[3].label == Integer(0));
    CHECK(nodes[5].label == Integer(1));
    CHECK(nodes[6].label == Integer(3));
    CHECK_FALSE(nodes[0].label);
    CHECK(nodes[0].parent == std::size_t{1});
}

TEST_CASE("signed tree mirrors the negative block") {
    const auto seq = label_sequence(OrderKind::signed_final_digits, 5);
    CHECK(seq.size() == 63);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) REQUIRE(oracle::signed_less(*seq[i].to_i64(), *seq[i + 1].to_i64()));
    const auto nodes = layout_tree(OrderKind::signed_final_digits, 5);
    CHECK(nodes.size() == 2 * 63 + 1);
}

TEST_CASE("formats") {
    RenderSpec spec{OrderKind::final_digits, 2, RenderFormat::text};
    const std::string text = render_order(spec);
    CHECK(text.find("sequence: 2 0 1 3") != std::string::npos);
    spec.format = RenderFormat::dot;
    const std::string dot = render_order(spec);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
    CHECK(dot.find("->") != std::string::npos);
    spec.format = RenderFormat::svg;
    const std::string svg = render_order(spec);
    CHECK(svg.rfind("<svg xmlns=", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK_THROWS_AS(parse_render_format("png"), UnsupportedSpec);
    CHECK_THROWS_AS(layout_tree(OrderKind::variant, 0), PreconditionViolation);
}
