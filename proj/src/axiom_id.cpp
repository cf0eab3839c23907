#include "clusterax/axiom_id.hpp"

#include <array>
#include <utility>

namespace clusterax {

namespace {

constexpr std::array<std::pair<AxiomId, std::string_view>, 34> kNames{{
    {AxiomId::m, "m"},         {AxiomId::a_prime, "a'"},   {AxiomId::k, "k"},
    {AxiomId::w, "w"},         {AxiomId::b3, "b3"},        {AxiomId::b4, "b4"},
    {AxiomId::u, "u"},         {AxiomId::uc, "uc"},        {AxiomId::u3, "u3"},
    {AxiomId::o_prime, "o'"},  {AxiomId::wp, "wp"},        {AxiomId::i, "i"},
    {AxiomId::l1, "l1"},       {AxiomId::l2, "l2"},        {AxiomId::n3o, "n3o"},
    {AxiomId::p2, "p2"},       {AxiomId::p3, "p3"},        {AxiomId::tb, "tb"},
    {AxiomId::tb_prime, "tb'"}, {AxiomId::hc, "hc"},       {AxiomId::tb2, "tb2"},
    {AxiomId::p4, "p4"},       {AxiomId::K1, "K1"},        {AxiomId::K2, "K2"},
    {AxiomId::UC, "UC"},       {AxiomId::WP, "WP"},        {AxiomId::I, "I"},
    {AxiomId::L1, "L1"},       {AxiomId::N3O, "N3O"},      {AxiomId::L2_prime, "L2'"},
    {AxiomId::L2_dprime, "L2''"}, {AxiomId::P2, "P2"},     {AxiomId::P3, "P3"},
    {AxiomId::P3_prime, "P3'"},
}};

constexpr std::array kAll{
    AxiomId::m,  AxiomId::a_prime, AxiomId::k,        AxiomId::w,        AxiomId::b3,        AxiomId::b4,
    AxiomId::u,  AxiomId::uc,      AxiomId::u3,       AxiomId::o_prime,  AxiomId::wp,        AxiomId::i,
    AxiomId::l1, AxiomId::l2,      AxiomId::n3o,      AxiomId::p2,       AxiomId::p3,        AxiomId::tb,
    AxiomId::tb_prime, AxiomId::hc, AxiomId::tb2,     AxiomId::p4,       AxiomId::K1,        AxiomId::K2,
    AxiomId::UC, AxiomId::WP,      AxiomId::I,        AxiomId::L1,       AxiomId::N3O,       AxiomId::L2_prime,
    AxiomId::L2_dprime, AxiomId::P2, AxiomId::P3,     AxiomId::P3_prime,
};

constexpr std::array kFirstOrder{
    AxiomId::m,       AxiomId::a_prime, AxiomId::k,  AxiomId::w,  AxiomId::b3,  AxiomId::b4, AxiomId::u,
    AxiomId::uc,      AxiomId::u3, AxiomId::o_prime, AxiomId::wp, AxiomId::i, AxiomId::l1,
    AxiomId::l2,      AxiomId::n3o, AxiomId::p2, AxiomId::p3,
};

constexpr std::array kSecondOrder{AxiomId::tb, AxiomId::tb_prime, AxiomId::hc, AxiomId::tb2, AxiomId::p4};

constexpr std::array kSet{
    AxiomId::K1,  AxiomId::K2,       AxiomId::UC,        AxiomId::WP, AxiomId::I,  AxiomId::L1,
    AxiomId::N3O, AxiomId::L2_prime, AxiomId::L2_dprime, AxiomId::P2, AxiomId::P3, AxiomId::P3_prime,
};

}  // namespace

std::string_view name(AxiomId id) noexcept {
    for (const auto& [key, text] : kNames) {
        if (key == id) {
            return text;
        }
    }
    return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view text) noexcept {
    for (const auto& [key, label] : kNames) {
        if (label == text) {
            return key;
        }
    }
    return std::nullopt;
}

AxiomSide side(AxiomId id) noexcept {
    switch (id) {
        case AxiomId::tb:
        case AxiomId::tb_prime:
        case AxiomId::hc:
        case AxiomId::tb2:
        case AxiomId::p4:
            return AxiomSide::transit_second_order;
        case AxiomId::K1:
        case AxiomId::K2:
        case AxiomId::UC:
        case AxiomId::WP:
        case AxiomId::I:
        case AxiomId::L1:
        case AxiomId::N3O:
        case AxiomId::L2_prime:
        case AxiomId::L2_dprime:
        case AxiomId::P2:
        case AxiomId::P3:
        case AxiomId::P3_prime:
            return AxiomSide::set_system;
        default:
            return AxiomSide::transit_first_order;
    }
}

std::span<const AxiomId> all_axioms() noexcept { return kAll; }
std::span<const AxiomId> first_order_transit_axioms() noexcept { return kFirstOrder; }
std::span<const AxiomId> second_order_axioms() noexcept { return kSecondOrder; }
std::span<const AxiomId> set_axioms() noexcept { return kSet; }

}  // namespace clusterax
