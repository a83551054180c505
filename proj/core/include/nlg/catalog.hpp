#pragma once

#include "nlg/forms.hpp"

#include <variant>

namespace nlg {

using FormVariant = std::variant<GroupFormUnitary, ControlledUnitary, DoubleUnitary>;

/// One concrete instantiation of a catalog construction at fixed dimensions.
struct CatalogVariant {
    std::size_t dA = 0;
    std::size_t dB = 0;
    FormVariant form;
    std::size_t expected_schmidt_rank = 0;
};

struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    std::string description;
    std::size_t group_order = 0;
    std::vector<CatalogVariant> variants;

    const CatalogVariant& variant_for_dim(std::size_t dA) const;
    const CatalogVariant& default_variant() const { return variants.front(); }
};

/// All built-in constructions, built once on first use.
const std::vector<CatalogEntry>& catalog();

/// Looks a name or alias up; throws LookupError for unknown names.
const CatalogEntry& catalog_lookup(const std::string& name);

std::vector<std::string> catalog_names();

const Matrix& assembled_of(const FormVariant& form);
std::size_t form_dA(const FormVariant& form);
std::size_t form_dB(const FormVariant& form);

} // namespace nlg
