"""TSSNet command-line front end."""
