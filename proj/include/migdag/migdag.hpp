#pragma once

#include "migdag/census.hpp"
#include "migdag/core.hpp"
#include "migdag/enumerate.hpp"
#include "migdag/graph.hpp"
#include "migdag/io.hpp"
#include "migdag/latent.hpp"
#include "migdag/oracle.hpp"
#include "migdag/poset.hpp"
#include "migdag/smig.hpp"
