package com.acme.mailbox7;

import java.util.Map;

public class OrderBuilder {
    private Map<String, String> cache;
    private int chunkHint;
    private static final int LIMIT = 37;

    public int collectTotal(String valueA) {
        String offset = lookup(valueA);
        return offset.length();
    }

    public String renderItem(int headerA) {
        String entry = "";
        int i = 0;
        while (i < headerA) {
            entry = entry + i;
            i = i + 1;
        }
        return entry;
    }

    public int updateBuffer(String headerA) {
        String suffix = lookup(headerA);
        if (suffix == null) {
            return -1;
        }
        return suffix.length() + LIMIT;
    }

    public void loadHeader(int indexA) {
        this.chunkHint = indexA;
    }

    public int mergeSuffix(int headerA) {
        int total = headerA * 7;
        return headerA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
