#pragma once

#include "bounds.hpp"
#include "cover.hpp"
#include "domination.hpp"
#include "graph.hpp"
#include "harness.hpp"
#include "json.hpp"
#include "rational.hpp"
