#include "bredonkit/stabilizer.hpp"

#include <sstream>

#include "bredonkit/eisenstein.hpp"
#include "bredonkit/errors.hpp"

namespace bredonkit {

std::string Eisenstein::str() const {
    std::ostringstream os;
    if (b == 0) {
        os << a;
    } else {
        if (a != 0) os << a << (b > 0 ? "+" : "");
        if (b == 1)
            os << "j";
        else if (b == -1)
            os << "-j";
        else
            os << b << "j";
    }
    return os.str();
}

int order(Stab g) {
    switch (g) {
        case Stab::Trivial: return 1;
        case Stab::C2: return 2;
        case Stab::C3: return 3;
        case Stab::V4: return 4;
        case Stab::S3: return 6;
        case Stab::A4: return 12;
    }
    return 0;
}

std::size_t class_count(Stab g) { return class_sizes(g).size(); }

const std::vector<long>& class_sizes(Stab g) {
    static const std::vector<long> trivial = {1};
    static const std::vector<long> c2 = {1, 1};
    static const std::vector<long> c3 = {1, 1, 1};
    static const std::vector<long> v4 = {1, 1, 1, 1};
    static const std::vector<long> s3 = {1, 3, 2};
    static const std::vector<long> a4 = {1, 3, 4, 4};
    switch (g) {
        case Stab::Trivial: return trivial;
        case Stab::C2: return c2;
        case Stab::C3: return c3;
        case Stab::V4: return v4;
        case Stab::S3: return s3;
        case Stab::A4: return a4;
    }
    return trivial;
}

const std::vector<std::string>& class_labels(Stab g) {
    static const std::vector<std::string> trivial = {"1"};
    static const std::vector<std::string> c2 = {"1", "g"};
    static const std::vector<std::string> c3 = {"1", "h", "h^2"};
    static const std::vector<std::string> v4 = {"1", "a", "b", "ab"};
    static const std::vector<std::string> s3 = {"1", "(12)", "(123)"};
    static const std::vector<std::string> a4 = {"1", "(12)(34)", "(123)",
                                                "(132)"};
    switch (g) {
        case Stab::Trivial: return trivial;
        case Stab::C2: return c2;
        case Stab::C3: return c3;
        case Stab::V4: return v4;
        case Stab::S3: return s3;
        case Stab::A4: return a4;
    }
    return trivial;
}

std::string tag(Stab g) {
    switch (g) {
        case Stab::Trivial: return "1";
        case Stab::C2: return "C2";
        case Stab::C3: return "C3";
        case Stab::V4: return "V4";
        case Stab::S3: return "S3";
        case Stab::A4: return "A4";
    }
    return "?";
}

std::optional<Stab> parse_stab(const std::string& t) {
    for (Stab g : kAllStabs)
        if (tag(g) == t) return g;
    return std::nullopt;
}

bool is_cyclic(Stab g) {
    return g == Stab::Trivial || g == Stab::C2 || g == Stab::C3;
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Canonical: return "canonical";
        case Variant::Id: return "id";
        case Variant::Inv: return "inv";
        case Variant::A: return "a";
        case Variant::B: return "b";
        case Variant::Ab: return "ab";
        case Variant::C123: return "c123";
        case Variant::C132: return "c132";
    }
    return "?";
}

std::optional<Variant> parse_variant(const std::string& name) {
    for (Variant v : {Variant::Canonical, Variant::Id, Variant::Inv,
                      Variant::A, Variant::B, Variant::Ab, Variant::C123,
                      Variant::C132})
        if (variant_name(v) == name) return v;
    return std::nullopt;
}

bool EmbeddingLabel::legal(Stab sub, Stab over, Variant variant) {
    if (sub == Stab::Trivial) return variant == Variant::Canonical;
    if (sub == Stab::C2) {
        switch (over) {
            case Stab::C2: return variant == Variant::Id;
            case Stab::V4:
                return variant == Variant::A || variant == Variant::B ||
                       variant == Variant::Ab;
            case Stab::S3:
            case Stab::A4: return variant == Variant::Canonical;
            default: return false;
        }
    }
    if (sub == Stab::C3) {
        switch (over) {
            case Stab::C3:
                return variant == Variant::Id || variant == Variant::Inv;
            case Stab::S3: return variant == Variant::Canonical;
            case Stab::A4:
                return variant == Variant::C123 || variant == Variant::C132;
            default: return false;
        }
    }
    return false;
}

std::vector<Variant> legal_variants(Stab sub, Stab over) {
    std::vector<Variant> out;
    for (Variant v : {Variant::Canonical, Variant::Id, Variant::Inv,
                      Variant::A, Variant::B, Variant::Ab, Variant::C123,
                      Variant::C132})
        if (EmbeddingLabel::legal(sub, over, v)) out.push_back(v);
    return out;
}

std::vector<std::size_t> EmbeddingLabel::class_map() const {
    if (!legal())
        throw IllegalEmbedding("illegal embedding " + str());
    if (sub == Stab::Trivial) return {0};
    if (sub == Stab::C2) {
        switch (over) {
            case Stab::C2: return {0, 1};
            case Stab::V4:
                switch (variant) {
                    case Variant::A: return {0, 1};
                    case Variant::B: return {0, 2};
                    default: return {0, 3};
                }
            case Stab::S3: return {0, 1};
            default: return {0, 1};  // A4: the unique class of order 2
        }
    }
    // sub == C3
    switch (over) {
        case Stab::C3:
            return variant == Variant::Id ? std::vector<std::size_t>{0, 1, 2}
                                          : std::vector<std::size_t>{0, 2, 1};
        case Stab::S3:
            // (123) and (132) are conjugate in S3.
            return {0, 2, 2};
        default:  // A4
            return variant == Variant::C123
                       ? std::vector<std::size_t>{0, 2, 3}
                       : std::vector<std::size_t>{0, 3, 2};
    }
}

std::string EmbeddingLabel::str() const {
    return tag(sub) + " -> " + tag(over) + " [" + variant_name(variant) + "]";
}

}  // namespace bredonkit
