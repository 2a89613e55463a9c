#pragma once

// Suffix-class trees of the three orders, as text, DOT or SVG.
//
// Every number n with len(n) <= depth sits at the node of its own digit
// string. Final-digits trees are laid out in order (0-subtree, node,
// 1-subtree), variant trees in pre-order, and the signed tree as a mirrored
// negative block, then 0, then the positive block.

#include <optional>
#include <string>
#include <vector>

#include "topoarith/numerals.hpp"
#include "topoarith/orders.hpp"

namespace topoarith {

enum class RenderFormat { text, dot, svg };

RenderFormat parse_render_format(std::string_view text);

struct RenderSpec {
    OrderKind order = OrderKind::final_digits;
    std::size_t depth = 5;
    RenderFormat format = RenderFormat::text;
};

struct TreeNode {
    std::string block;            // "", "+" or "-"
    DigitString s;                // the suffix class
    std::size_t x = 0;            // horizontal slot
    std::optional<Integer> label;
    std::optional<std::size_t> parent;
};

/// Nodes sorted by horizontal slot.
std::vector<TreeNode> layout_tree(OrderKind order, std::size_t depth);

/// Labels from left to right.
std::vector<Integer> label_sequence(OrderKind order, std::size_t depth);

std::string render_order(const RenderSpec& spec);

}  // namespace topoarith
