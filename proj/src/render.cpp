#include "topoarith/render.hpp"

#include <algorithm>
#include <sstream>

namespace topoarith {

RenderFormat parse_render_format(std::string_view text) {
    if (text == "text") return RenderFormat::text;
    if (text == "dot") return RenderFormat::dot;
    if (text == "svg") return RenderFormat::svg;
    throw UnsupportedSpec("unsupported format: " + std::string(text));
}

namespace {

enum class Walk { in_order, pre_order, mirrored };

struct Builder {
    std::size_t depth;
    std::vector<TreeNode> nodes;
    std::size_t next_x = 0;

    void walk(const std::string& block, std::vector<bool> bits, std::optional<std::size_t> parent, Walk mode) {
        const std::size_t id = nodes.size();
        TreeNode node;
        node.block = block;
        node.s = DigitString(bits);
        node.parent = parent;
        const bool canonical = bits.empty() || bits.back();
        if (canonical && !(block != "" && bits.empty())) {
            Integer v(node.s.value());
            node.label = block == "-" ? -v : v;
        }
        nodes.push_back(node);
        auto child = [&](bool d) {
            if (bits.size() >= depth) return;
            auto b = bits;
            b.push_back(d);
            walk(block, b, id, mode);
        };
        auto emit = [&] { nodes[id].x = next_x++; };
        switch (mode) {
            case Walk::in_order: child(false), emit(), child(true); break;
            case Walk::pre_order: emit(), child(false), child(true); break;
            case Walk::mirrored: child(true), emit(), child(false); break;
        }
    }
};

std::string ascii(const DigitString& s) { return s.empty() ? "e" : s.str(); }

std::string node_name(const TreeNode& n) {
    if (n.block == "0") return "0";
    return n.block + ascii(n.s);
}

}  // namespace

std::vector<TreeNode> layout_tree(OrderKind order, std::size_t depth) {
    if (depth < 1) throw PreconditionViolation("render depth must be at least 1");
    if (depth > 12) throw PreconditionViolation("render depth above 12");
    Builder b{depth, {}, 0};
    switch (order) {
        case OrderKind::final_digits: b.walk("", {}, std::nullopt, Walk::in_order); break;
        case OrderKind::variant: b.walk("", {}, std::nullopt, Walk::pre_order); break;
        case OrderKind::signed_final_digits: {
            b.walk("-", {}, std::nullopt, Walk::mirrored);
            TreeNode zero;
            zero.block = "0";
            zero.label = Integer(0);
            zero.x = b.next_x++;
            b.nodes.push_back(zero);
            b.walk("+", {}, std::nullopt, Walk::in_order);
            break;
        }
    }
    // Reorder by slot, remapping parent links.
    std::vector<std::size_t> by_x(b.nodes.size());
    for (std::size_t i = 0; i < b.nodes.size(); ++i) by_x[b.nodes[i].x] = i;
    std::vector<std::size_t> new_index(b.nodes.size());
    for (std::size_t k = 0; k < by_x.size(); ++k) new_index[by_x[k]] = k;
    std::vector<TreeNode> out;
    for (std::size_t k = 0; k < by_x.size(); ++k) {
        TreeNode n = b.nodes[by_x[k]];
        if (n.parent) n.parent = new_index[*n.parent];
        out.push_back(n);
    }
    return out;
}

std::vector<Integer> label_sequence(OrderKind order, std::size_t depth) {
    std::vector<Integer> out;
    for (const auto& n : layout_tree(order, depth))
        if (n.label) out.push_back(*n.label);
    return out;
}

std::string render_order(const RenderSpec& spec) {
    const auto nodes = layout_tree(spec.order, spec.depth);
    std::ostringstream os;
    const std::string name(to_string(spec.order));
    switch (spec.format) {
        case RenderFormat::text: {
            std::size_t width = 2;
            for (const auto& n : nodes)
                if (n.label) width = std::max(width, n.label->str().size() + 1);
            os << "# " << name << " order, depth " << spec.depth << '\n';
            for (std::size_t level = 0; level <= spec.depth; ++level) {
                std::string line(nodes.size() * width, ' ');
                for (const auto& n : nodes) {
                    if (n.s.size() != level) continue;
                    const std::string text = n.label ? n.label->str() : (n.block == "+" || n.block == "-") && n.s.empty() ? n.block : ".";
                    line.replace(n.x * width + width - text.size(), text.size(), text);
                }
                line.erase(line.find_last_not_of(' ') + 1);
                os << line << '\n';
            }
            os << "sequence:";
            for (const auto& n : nodes)
                if (n.label) os << ' ' << n.label->str();
            os << '\n';
            break;
        }
        case RenderFormat::dot: {
            os << "digraph \"" << name << "\" {\n";
            os << "  graph [ordering=out];\n";
            os << "  node [shape=box, fontname=\"Helvetica\"];\n";
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                const auto& n = nodes[i];
                os << "  n" << i << " [label=\"" << node_name(n);
                if (n.label && n.block != "0") os << "\\n" << n.label->str();
                os << "\", pos=\"" << n.x << ",-" << n.s.size() << "!\"];\n";
            }
            for (std::size_t i = 0; i < nodes.size(); ++i)
                if (nodes[i].parent)
                    os << "  n" << *nodes[i].parent << " -> n" << i << " [label=\"" << (nodes[i].s.bits().back() ? 1 : 0)
                       << "\"];\n";
            os << "}\n";
            break;
        }
        case RenderFormat::svg: {
            const std::size_t step = 28, row = 56, margin = 20;
            const std::size_t w = nodes.size() * step + 2 * margin;
            const std::size_t h = (spec.depth + 1) * row + 2 * margin;
            auto cx = [&](const TreeNode& n) { return margin + n.x * step + step / 2; };
            auto cy = [&](const TreeNode& n) { return margin + n.s.size() * row + row / 2; };
            os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
               << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
            os << "<title>" << name << " order, depth " << spec.depth << "</title>\n";
            os << "<g stroke=\"#888\" stroke-width=\"1\">\n";
            for (const auto& n : nodes)
                if (n.parent) {
                    const auto& p = nodes[*n.parent];
                    os << "<line x1=\"" << cx(p) << "\" y1=\"" << cy(p) << "\" x2=\"" << cx(n) << "\" y2=\"" << cy(n)
                       << "\"/>\n";
                }
            os << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
            for (const auto& n : nodes) {
                os << "<circle cx=\"" << cx(n) << "\" cy=\"" << cy(n) << "\" r=\"3\" fill=\"#333\"/>";
                if (n.label) os << "<text x=\"" << cx(n) << "\" y=\"" << cy(n) - 6 << "\">" << n.label->str() << "</text>";
                os << '\n';
            }
            os << "</g>\n</svg>\n";
            break;
        }
    }
    return os.str();
}

}  // namespace topoarith
