/*
Copyright 2026 The kgqr Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include "kgqr/graph.hpp"
#include "kgqr/query.hpp"

namespace kgqr {

/// Evaluates a BGP query: one row per matching assignment of all body
/// variables, projected to the head (duplicates collapsed when the query is
/// DISTINCT). Joins pick the most-bound remaining pattern first, ties broken
/// by body order; the result set is order-independent of the body
/// permutation. An empty solution set is a valid result (a failed query).
///
/// Evaluation is defined over the materialized closure, so callers normally
/// pass a graph with closure_applied(). Wall time around the join is
/// recorded on the returned solution set.
SolutionSet evaluate(const BGPQuery& q, const Graph& g);

}  // namespace kgqr
