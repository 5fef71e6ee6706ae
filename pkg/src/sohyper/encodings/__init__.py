from .async_od import PROGRAMS, async_od_instances, gen_async_od, stutter_step
from .ck import ck_instances, gen_ck_chain
from .common import Instance
from .mazurkiewicz import gen_mazurkiewicz, mazurkiewicz_instance, swap_step
from .muddy import gen_muddy_children, muddy_instance
from .regular_mc import gen_regular_mc, regular_mc_instance, regular_mc_text

__all__ = [
    "Instance",
    "PROGRAMS",
    "async_od_instances",
    "ck_instances",
    "gen_async_od",
    "gen_ck_chain",
    "gen_mazurkiewicz",
    "gen_muddy_children",
    "gen_regular_mc",
    "mazurkiewicz_instance",
    "muddy_instance",
    "regular_mc_instance",
    "regular_mc_text",
    "stutter_step",
    "swap_step",
]
