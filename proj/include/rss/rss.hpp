#pragma once

#include "rss/cq.hpp"
#include "rss/fixtures.hpp"
#include "rss/graph.hpp"
#include "rss/reasoner.hpp"
#include "rss/series_view.hpp"
#include "rss/temporal.hpp"
#include "rss/term.hpp"
#include "rss/turtle.hpp"
#include "rss/validator.hpp"
#include "rss/vocab.hpp"
