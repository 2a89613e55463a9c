#include <cctype>

#include "topoarith/topology.hpp"

namespace topoarith {

namespace {

std::string bound_str(const std::optional<Integer>& b, bool upper) {
    if (b) return b->str();
    return upper ? "inf" : "-inf";
}

std::string sign_str(Sign s) { return s == Sign::negative ? "-" : "+"; }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    // Lowercase word with inner dashes: "final-digits", "-inf" is not a word.
    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                       (text_[pos_] == '-' && pos_ > start)))
            ++pos_;
        if (pos_ == start) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string token() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' && text_[pos_] != ']' &&
               !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Integer integer() {
        const std::string t = token();
        try {
            return Integer::parse(t);
        } catch (const std::exception&) {
            fail("expected an integer, got '" + t + "'");
        }
    }

    Natural natural() {
        const std::string t = token();
        try {
            return Natural::parse(t);
        } catch (const std::exception&) {
            fail("expected a natural, got '" + t + "'");
        }
    }

    std::optional<Integer> bound(bool upper) {
        const std::string t = token();
        if (t == (upper ? "inf" : "-inf")) return std::nullopt;
        try {
            return Integer::parse(t);
        } catch (const std::exception&) {
            fail("expected an interval end, got '" + t + "'");
        }
    }

    Sign sign() {
        if (accept('+')) return Sign::positive;
        if (accept('-')) return Sign::negative;
        fail("expected a sign");
    }

    DigitString bits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) ++pos_;
        return DigitString::parse(text_.substr(start, pos_ - start));
    }

    Natural segment() {
        expect('[');
        if (natural() != Natural(0)) fail("segments start at 0");
        expect(',');
        Natural k = natural();
        expect(']');
        return k;
    }

    OrderKind kind() {
        const std::string w = word();
        try {
            return parse_order_kind(w);
        } catch (const ParseError&) {
            fail("unknown order kind '" + w + "'");
        }
    }

    BasicOpen basic() {
        const std::string w = word();
        if (w == "whole") return WholeSpace{};
        if (w == "empty") return EmptySet{};
        expect('(');
        BasicOpen out;
        if (w == "suffix") {
            out = SuffixClass{bits()};
        } else if (w == "signed-suffix") {
            DigitString s = bits();
            if (s.empty()) fail("signed suffix needs digits");
            expect(',');
            out = SignedSuffixClass{s, sign()};
        } else if (w == "sign") {
            out = SignBlock{sign()};
        } else if (w == "zero-tail") {
            out = ZeroTail{static_cast<std::size_t>(*natural().to_u64())};
        } else if (w == "interval") {
            OrderKind k = kind();
            expect(',');
            auto lo = bound(false);
            expect(',');
            out = OrderInterval{k, lo, bound(true)};
        } else if (w == "right-open") {
            OrderKind k = kind();
            expect(',');
            Integer lo = integer();
            expect(',');
            out = RightOpenInterval{k, lo, bound(true)};
        } else if (w == "initial") {
            out = InitialSegment{natural()};
        } else if (w == "final") {
            out = FinalSegment{natural()};
        } else if (w == "point") {
            out = Singleton{integer()};
        } else if (w == "meet") {
            Meet m;
            m.parts.push_back(basic());
            while (accept(',')) m.parts.push_back(basic());
            if (m.parts.size() < 2) fail("meet needs two parts");
            out = m;
        } else {
            fail("unknown open set '" + w + "'");
        }
        expect(')');
        return out;
    }

    TopologySpec topology() {
        const std::string w = word();
        if (w == "discrete") return Discrete{};
        if (w == "indiscrete") return Indiscrete{};
        if (w == "final-digits") return FinalDigits{};
        if (w == "signed-final-digits") return SignedFinalDigits{};
        if (w == "initial-segments") return InitialSegments{};
        if (w == "final-segments") return FinalSegments{};
        expect('(');
        auto close = [&](TopologySpec t) {
            expect(')');
            return t;
        };
        if (w == "order") return close(OrderTopology{kind()});
        if (w == "right-open") return close(RightOpenTopology{kind()});
        if (w == "restrict") {
            TopologySpec inner = topology();
            expect(',');
            return close(Restrict{inner, segment()});
        }
        if (w == "blend") {
            TopologySpec fine = topology();
            expect(',');
            TopologySpec coarse = topology();
            expect(',');
            return close(Blend{fine, coarse, segment()});
        }
        if (w == "isolate-below") {
            TopologySpec inner = topology();
            expect(',');
            return close(IsolateBelow{inner, natural()});
        }
        if (w == "union") {
            TopologySpec left = topology();
            expect(',');
            return close(UnionOf{left, topology()});
        }
        if (w == "augment-initial") return close(AugmentInitial{topology()});
        if (w == "augment-final") return close(AugmentFinal{topology()});
        fail("unknown topology '" + w + "'");
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const BasicOpen& U) {
    struct Printer {
        std::string operator()(const SuffixClass& c) const { return "suffix(" + c.s.str() + ")"; }
        std::string operator()(const SignedSuffixClass& c) const {
            return "signed-suffix(" + c.s.str() + "," + sign_str(c.sign) + ")";
        }
        std::string operator()(const SignBlock& b) const { return "sign(" + sign_str(b.sign) + ")"; }
        std::string operator()(const ZeroTail& z) const { return "zero-tail(" + std::to_string(z.k) + ")"; }
        std::string operator()(const OrderInterval& o) const {
            return "interval(" + std::string(to_string(o.kind)) + "," + bound_str(o.lo, false) + "," +
                   bound_str(o.hi, true) + ")";
        }
        std::string operator()(const RightOpenInterval& o) const {
            return "right-open(" + std::string(to_string(o.kind)) + "," + o.lo.str() + "," + bound_str(o.hi, true) + ")";
        }
        std::string operator()(const InitialSegment& s) const { return "initial(" + s.k.str() + ")"; }
        std::string operator()(const FinalSegment& s) const { return "final(" + s.k.str() + ")"; }
        std::string operator()(const Singleton& p) const { return "point(" + p.x.str() + ")"; }
        std::string operator()(const WholeSpace&) const { return "whole"; }
        std::string operator()(const EmptySet&) const { return "empty"; }
        std::string operator()(const Meet& m) const {
            std::string out = "meet(";
            for (std::size_t i = 0; i < m.parts.size(); ++i) out += (i ? "," : "") + to_string(m.parts[i]);
            return out + ")";
        }
    };
    return std::visit(Printer{}, U.get());
}

std::string to_string(const TopologySpec& tau) {
    struct Printer {
        std::string operator()(const Discrete&) const { return "discrete"; }
        std::string operator()(const Indiscrete&) const { return "indiscrete"; }
        std::string operator()(const FinalDigits&) const { return "final-digits"; }
        std::string operator()(const SignedFinalDigits&) const { return "signed-final-digits"; }
        std::string operator()(const OrderTopology& o) const { return "order(" + std::string(to_string(o.kind)) + ")"; }
        std::string operator()(const RightOpenTopology& o) const {
            return "right-open(" + std::string(to_string(o.kind)) + ")";
        }
        std::string operator()(const InitialSegments&) const { return "initial-segments"; }
        std::string operator()(const FinalSegments&) const { return "final-segments"; }
        std::string operator()(const Restrict& r) const {
            return "restrict(" + to_string(*r.inner) + ",[0," + r.bound.str() + "])";
        }
        std::string operator()(const Blend& b) const {
            return "blend(" + to_string(*b.fine) + "," + to_string(*b.coarse) + ",[0," + b.bound.str() + "])";
        }
        std::string operator()(const IsolateBelow& b) const {
            return "isolate-below(" + to_string(*b.inner) + "," + b.bound.str() + ")";
        }
        std::string operator()(const UnionOf& u) const {
            return "union(" + to_string(*u.left) + "," + to_string(*u.right) + ")";
        }
        std::string operator()(const AugmentInitial& a) const { return "augment-initial(" + to_string(*a.inner) + ")"; }
        std::string operator()(const AugmentFinal& a) const { return "augment-final(" + to_string(*a.inner) + ")"; }
    };
    return std::visit(Printer{}, tau.get());
}

BasicOpen parse_basic_open(std::string_view text) {
    Parser p(text);
    BasicOpen U = p.basic();
    p.finish();
    return U;
}

TopologySpec parse_topology(std::string_view text) {
    Parser p(text);
    TopologySpec tau = p.topology();
    p.finish();
    return tau;
}

}  // namespace topoarith
