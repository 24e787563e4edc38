#pragma once

#include "exm/measure.hpp"
#include "exm/product.hpp"

#include <json.hpp>

#include <string>

namespace exm {

using json = nlohmann::json;

/// Parse with a uniform diagnostic: malformed input raises
/// std::invalid_argument (the CLI maps that to exit code 2).
json parse_json_text(const std::string& text);

GroupSpec group_from_json(const json& j);
json group_to_json(const GroupSpec& G);

SetValue set_from_json(const json& j, const GroupSpec& G);
json set_to_json(const SetValue& s);

MeasureSpec measure_from_json(const json& j, const GroupSpec& G);
json measure_to_json(const MeasureSpec& m);

RectUnion rect_union_from_json(const json& j);
json rect_union_to_json(const RectUnion& r);

ProductSet product_set_from_json(const json& j, const GroupSpec& G);
json product_set_to_json(const ProductSet& p);

SimpleFunc simple_func_from_json(const json& j, const GroupSpec& G);
json simple_func_to_json(const SimpleFunc& f);

StepFuncVec step_func_from_json(const json& j, const GroupSpec& G);
json step_func_to_json(const StepFuncVec& f);

SimpleFunc2D simple_func2d_from_json(const json& j, const GroupSpec& G);
StepFuncVec2D step_func2d_from_json(const json& j, const GroupSpec& G);

Element element_from_json(const json& j, const GroupSpec& G);
json element_to_json(const Element& e);

}  // namespace exm
