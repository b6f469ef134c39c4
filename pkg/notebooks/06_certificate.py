# %% [markdown]
# # Certificates
#
# The CLI writes the same JSON; here the pipeline runs with a small M.

# %%
from padovan_repdigits.certificate import Certificate, render_markdown
from padovan_repdigits.cli import RunConfig, cmd_verify_all

res = cmd_verify_all(RunConfig(M_override=10**6))
print("exit status", res.status, "-", res.message)

text = res.certificate.to_json()
assert Certificate.from_json(text).to_json() == text
print(render_markdown(res.certificate))
