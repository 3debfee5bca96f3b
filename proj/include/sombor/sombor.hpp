#pragma once

#include "sombor/bounds.hpp"
#include "sombor/closed_forms.hpp"
#include "sombor/compose.hpp"
#include "sombor/error.hpp"
#include "sombor/families.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"
#include "sombor/io.hpp"
#include "sombor/rng.hpp"
