#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schemaug/json.hpp"

namespace schemaug {

// One slot declaration. The full identifier is "<domain>-<base_name>"; the
// augmentation engine rewrites the two halves independently, so they are kept
// separate here.
struct SlotDef {
    std::string domain;
    std::string base_name;
    std::string description;
    std::vector<std::string> possible_values;

    std::string full_id() const { return domain + "-" + base_name; }

    bool operator==(const SlotDef&) const = default;
};

// Ordered, immutable slot collection. All construction goes through
// from_slots(), which enforces the identity rules (non-empty names, no '-' in
// domains, unique full identifiers, duplicate-free value lists). Iteration
// order is the insertion order; prompt rendering depends on it.
class Schema {
public:
    Schema() = default;

    static Schema from_slots(std::vector<SlotDef> slots);

    const std::vector<SlotDef>& slots() const { return slots_; }
    // Domain names in order of first appearance.
    const std::vector<std::string>& domains() const { return domains_; }

    std::size_t size() const { return slots_.size(); }
    bool empty() const { return slots_.empty(); }
    bool has_domain(const std::string& domain) const;
    const SlotDef* find(const std::string& full_id) const;

    bool operator==(const Schema&) const = default;

private:
    std::vector<SlotDef> slots_;
    std::vector<std::string> domains_;
};

// Splits "hotel-pricerange" into ("hotel", "pricerange") at the first '-'.
// Throws if there is no '-' or either half is empty.
std::pair<std::string, std::string> split_slot_id(const std::string& full_id);

// Accepts two file shapes:
//  * a JSON array of services: [{"service_name":..., "slots":[{"name":
//    "hotel-pricerange", "description":..., "possible_values":[...]}, ...]}]
//    (unknown per-slot fields are ignored), or
//  * a flat object: {"slots":[{"domain":..., "name":..., "description":...,
//    "possible_values":[...]}]}.
Schema load_schema(const std::filesystem::path& path);
Schema schema_from_json(const Json& j);

// Canonical emission uses the services shape; save(load(f)) is JSON-equal to
// f for canonical files.
Json schema_to_json(const Schema& schema);
void save_schema(const Schema& schema, const std::filesystem::path& path);

// Flat {"slots":[...]} form used when a schema is embedded inside a record.
Json schema_to_flat_json(const Schema& schema);

// Keeps exactly the slots whose domain is in `domains`, original order.
// Throws on a domain not present in the schema.
Schema restrict_to_domains(const Schema& schema,
                           const std::set<std::string>& domains);

}  // namespace schemaug
