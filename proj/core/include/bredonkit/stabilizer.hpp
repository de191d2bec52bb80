#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bredonkit {

/// The finite groups of Klein's classification of finite subgroups of
/// PSL2 of imaginary quadratic integers. No other group is constructible.
enum class Stab { Trivial, C2, C3, V4, S3, A4 };

constexpr std::array<Stab, 6> kAllStabs = {Stab::Trivial, Stab::C2, Stab::C3,
                                           Stab::V4,      Stab::S3, Stab::A4};

int order(Stab g);
std::size_t class_count(Stab g);
const std::vector<long>& class_sizes(Stab g);
const std::vector<std::string>& class_labels(Stab g);

/// Wire tags: "1", "C2", "C3", "V4", "S3", "A4".
std::string tag(Stab g);
std::optional<Stab> parse_stab(const std::string& tag);

bool is_cyclic(Stab g);

/// Which conjugation variant an inclusion of a cell stabilizer into a
/// vertex stabilizer uses. Only the combinations listed in
/// EmbeddingLabel::legal exist.
enum class Variant { Canonical, Id, Inv, A, B, Ab, C123, C132 };

std::string variant_name(Variant v);
std::optional<Variant> parse_variant(const std::string& name);

struct EmbeddingLabel {
    Stab sub = Stab::Trivial;
    Stab over = Stab::Trivial;
    Variant variant = Variant::Canonical;

    bool operator==(const EmbeddingLabel&) const = default;

    static bool legal(Stab sub, Stab over, Variant variant);
    bool legal() const { return legal(sub, over, variant); }

    /// Map from sub's conjugacy classes to over's conjugacy classes.
    /// Throws IllegalEmbedding on illegal labels.
    std::vector<std::size_t> class_map() const;

    std::string str() const;
};

/// All legal variants for a (sub, over) pair; empty if none.
std::vector<Variant> legal_variants(Stab sub, Stab over);

}  // namespace bredonkit
